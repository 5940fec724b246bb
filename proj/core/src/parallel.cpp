#include "modint/parallel.hpp"

#include "modint/errors.hpp"
#include "op_support.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace modint
{

bool IncompatibilitySet::contains( StateIndex s ) const
{
    return std::binary_search( incompatible.begin(), incompatible.end(), s );
}

void check_composable( const ModalAutomaton& p1, const ModalAutomaton& p2 )
{
    const Alphabet& a1 = p1.alphabet();
    const Alphabet& a2 = p2.alphabet();
    for ( const auto& a : a1.actions() )
    {
        if ( !a2.contains( a ) )
            continue;
        const bool ok = ( a1.is_input( a ) && a2.is_output( a ) ) || ( a1.is_output( a ) && a2.is_input( a ) );
        if ( !ok )
            throw NotComposable( a, "action " + a + " is shared but not an input of one operand and an output of "
                                                    "the other" );
    }
}

Alphabet product_alphabet( const Alphabet& a1, const Alphabet& a2 )
{
    Alphabet out;
    for ( const auto* side : { &a1, &a2 } )
    {
        for ( const auto& i : side->inputs )
            if ( !a1.is_output( i ) && !a2.is_output( i ) )
                out.inputs.insert( i );
        for ( const auto& o : side->outputs )
            if ( !a1.is_input( o ) && !a2.is_input( o ) )
                out.outputs.insert( o );
    }
    return out;
}

namespace detail
{

ParallelProduct parallel_product( const ModalAutomaton& p1, const ModalAutomaton& p2, Flavor flavor,
                                  ParallelOptions options )
{
    if ( p1.flavor() != flavor || p2.flavor() != flavor )
        throw FlavorMismatch( "parallel composition expects two " + std::string( to_string( flavor ) ) +
                              " operands, got " + std::string( to_string( p1.flavor() ) ) + " and " +
                              std::string( to_string( p2.flavor() ) ) );
    if ( options.require_valid )
    {
        require_valid( p1, flavor, "left operand" );
        require_valid( p2, flavor, "right operand" );
    }
    check_composable( p1, p2 );

    const Alphabet& a1 = p1.alphabet();
    const Alphabet& a2 = p2.alphabet();
    AutomatonBuilder b( flavor, combined_name( p1, "par", p2 ), product_alphabet( a1, a2 ) );

    using Handle = AutomatonBuilder::Handle;
    std::map<std::pair<StateIndex, StateIndex>, Handle> handle;
    std::deque<std::pair<StateIndex, StateIndex>> work;
    auto visit = [ & ]( StateIndex x, StateIndex y ) {
        auto [ it, fresh ] = handle.emplace( std::pair{ x, y }, 0 );
        if ( fresh )
        {
            it->second = b.add_state( StateName::pair( p1.state( x ), p2.state( y ) ) );
            work.emplace_back( x, y );
        }
        return it->second;
    };
    b.set_initial( visit( p1.initial(), p2.initial() ) );

    while ( !work.empty() )
    {
        auto [ x, y ] = work.front();
        work.pop_front();
        const Handle h = handle.at( { x, y } );

        // (Must1), (Must2)
        for ( const auto& [ label, sets ] : p1.must_out( x ) )
            if ( !a2.contains( label ) )
                for ( const auto& targets : sets )
                {
                    std::vector<Handle> ts;
                    for ( StateIndex t : targets )
                        ts.push_back( visit( t, y ) );
                    b.add_must( h, label, std::move( ts ) );
                }
        for ( const auto& [ label, sets ] : p2.must_out( y ) )
            if ( !a1.contains( label ) )
                for ( const auto& targets : sets )
                {
                    std::vector<Handle> ts;
                    for ( StateIndex t : targets )
                        ts.push_back( visit( x, t ) );
                    b.add_must( h, label, std::move( ts ) );
                }

        // (May1), (May2), (May3)
        for ( const auto& [ label, targets ] : p1.may_out( x ) )
        {
            if ( !a2.contains( label ) )
            {
                for ( StateIndex t : targets )
                    b.add_may( h, label, visit( t, y ) );
                continue;
            }
            for ( StateIndex t : targets )
                for ( StateIndex u : p2.may_targets( y, label ) )
                    b.add_may( h, std::string( tau ), visit( t, u ) );
        }
        for ( const auto& [ label, targets ] : p2.may_out( y ) )
            if ( !a1.contains( label ) )
                for ( StateIndex u : targets )
                    b.add_may( h, label, visit( x, u ) );
    }

    ParallelProduct product{ b.build(), {}, {} };
    product.origin.resize( product.automaton.size() );
    for ( const auto& [ xy, h ] : handle )
        product.origin[ *product.automaton.find( b.state( h ) ) ] = xy;
    for ( const auto& a : a1.actions() )
        if ( a2.contains( a ) )
            product.shared.push_back( a );
    return product;
}

IncompatibilitySet incompatibility_set( const ParallelProduct& product, const ModalAutomaton& p1,
                                        const ModalAutomaton& p2 )
{
    const ModalAutomaton& a = product.automaton;
    IncompatibilitySet e;
    std::vector<bool> in_e( a.size(), false );
    std::deque<StateIndex> work;

    for ( StateIndex s = 0; s < a.size(); ++s )
    {
        const auto [ x, y ] = product.origin.at( s );
        for ( const auto& act : product.shared )
        {
            const char* rule = nullptr;
            if ( p1.alphabet().is_output( act ) && p1.has_may( x, act ) && !p2.has_must( y, act ) )
                rule = "error-(a)";
            else if ( p2.alphabet().is_output( act ) && p2.has_may( y, act ) && !p1.has_must( x, act ) )
                rule = "error-(b)";
            if ( rule )
            {
                in_e[ s ] = true;
                e.errors.push_back( s );
                e.provenance.emplace( s, IncompatibilityCause{ rule, act, std::nullopt } );
                work.push_back( s );
                break;
            }
        }
    }

    std::vector<std::vector<std::pair<StateIndex, std::string>>> autonomous_pre( a.size() );
    for ( const auto& t : a.mays() )
        if ( is_tau( t.label ) || a.alphabet().is_output( t.label ) )
            autonomous_pre[ t.target ].emplace_back( t.source, t.label );

    while ( !work.empty() )
    {
        StateIndex s = work.front();
        work.pop_front();
        for ( const auto& [ pre, label ] : autonomous_pre[ s ] )
            if ( !in_e[ pre ] )
            {
                in_e[ pre ] = true;
                e.provenance.emplace( pre, IncompatibilityCause{ "autonomous-step", label, s } );
                work.push_back( pre );
            }
    }

    for ( StateIndex s = 0; s < a.size(); ++s )
        if ( in_e[ s ] )
            e.incompatible.push_back( s );
    return e;
}

CompositionResult parallel_compose( const ModalAutomaton& p1, const ModalAutomaton& p2, Flavor flavor,
                                    ParallelOptions options )
{
    CompositionResult r{ parallel_product( p1, p2, flavor, options ), {}, {}, std::nullopt };
    r.incompatible_states = incompatibility_set( r.product, p1, p2 );
    const ModalAutomaton& a = r.product.automaton;
    const IncompatibilitySet& e = r.incompatible_states;

    std::set<PrunedTransition> pruned;
    std::set<std::tuple<StateIndex, std::string, StateIndex>> dropped_mays;
    std::set<std::tuple<StateIndex, std::string, std::vector<StateIndex>>> dropped_musts;

    for ( const auto& t : a.musts() )
    {
        if ( e.contains( t.source ) )
        {
            dropped_musts.emplace( t.source, t.label, t.targets );
            continue;
        }
        if ( std::none_of( t.targets.begin(), t.targets.end(), [ & ]( StateIndex x ) { return e.contains( x ); } ) )
            continue;
        dropped_musts.emplace( t.source, t.label, t.targets );
        pruned.insert( { "must", t.source, t.label, t.targets } );
        // The mays underlying the removed must go with it.
        for ( StateIndex x : t.targets )
            if ( a.has_may( t.source, t.label, x ) )
                dropped_mays.emplace( t.source, t.label, x );
    }
    for ( const auto& t : a.mays() )
        if ( e.contains( t.source ) || e.contains( t.target ) )
            dropped_mays.emplace( t.source, t.label, t.target );
    for ( const auto& [ source, label, target ] : dropped_mays )
        if ( !e.contains( source ) )
            pruned.insert( { "may", source, label, { target } } );
    r.pruned.assign( pruned.begin(), pruned.end() );

    if ( e.contains( a.initial() ) )
        return r;

    AutomatonBuilder b( a );
    std::erase_if( b.mays(), [ & ]( const AutomatonBuilder::MayKey& t ) {
        const auto& [ s, l, x ] = t;
        return dropped_mays.contains( { static_cast<StateIndex>( s ), l, static_cast<StateIndex>( x ) } );
    } );
    std::erase_if( b.musts(), [ & ]( const AutomatonBuilder::MustKey& t ) {
        const auto& [ s, l, xs ] = t;
        return dropped_musts.contains(
                { static_cast<StateIndex>( s ), l, std::vector<StateIndex>( xs.begin(), xs.end() ) } );
    } );
    b.remove_states( std::vector<AutomatonBuilder::Handle>( e.incompatible.begin(), e.incompatible.end() ) );
    r.automaton = b.build();
    return r;
}

} // namespace detail

} // namespace modint
