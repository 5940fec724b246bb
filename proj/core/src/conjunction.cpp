#include "modint/conjunction.hpp"

#include "modint/weak_closure.hpp"
#include "op_support.hpp"

#include <algorithm>
#include <deque>

namespace modint
{

namespace
{

/// Index in `original` of each state of `renamed` (a rename_disjoint copy).
std::vector<StateIndex> back_map( const ModalAutomaton& renamed, const ModalAutomaton& original )
{
    std::vector<StateIndex> out( renamed.size() );
    const bool same = renamed.states() == original.states();
    for ( StateIndex i = 0; i < renamed.size(); ++i )
        out[ i ] = same ? i : *original.find( renamed.state( i ).inner() );
    return out;
}

} // namespace

namespace detail
{

ConjunctiveProduct conjunctive_product( const ModalAutomaton& p0, const ModalAutomaton& q0, bool with_components )
{
    auto [ p, q ] = with_components ? rename_disjoint( p0, q0 ) : std::pair{ p0, q0 };
    const auto p_back = back_map( p, p0 );
    const auto q_back = back_map( q, q0 );
    const Alphabet& alphabet = p.alphabet();
    const WeakClosure wp( p );
    const WeakClosure wq( q );

    using Handle = AutomatonBuilder::Handle;
    AutomatonBuilder b( p.flavor(), combined_name( p0, "and", q0 ), alphabet );
    const std::size_t np = p.size();
    const std::size_t nq = q.size();
    std::vector<Handle> pair_handle( np * nq );
    for ( StateIndex i = 0; i < np; ++i )
        for ( StateIndex j = 0; j < nq; ++j )
            pair_handle[ i * nq + j ] = b.add_state( StateName::wedge( p.state( i ), q.state( j ) ) );
    auto at = [ & ]( StateIndex i, StateIndex j ) { return pair_handle[ i * nq + j ]; };
    b.set_initial( at( p.initial(), q.initial() ) );

    std::vector<Handle> p_handle;
    std::vector<Handle> q_handle;
    if ( with_components )
    {
        for ( const auto& s : p.states() )
            p_handle.push_back( b.add_state( s ) );
        for ( const auto& s : q.states() )
            q_handle.push_back( b.add_state( s ) );
        auto inherit = [ &b ]( const ModalAutomaton& c, const std::vector<Handle>& h ) {
            for ( const auto& t : c.mays() )
                b.add_may( h[ t.source ], t.label, h[ t.target ] );
            for ( const auto& t : c.musts() )
            {
                std::vector<Handle> ts;
                for ( StateIndex x : t.targets )
                    ts.push_back( h[ x ] );
                b.add_must( h[ t.source ], t.label, std::move( ts ) );
            }
        };
        inherit( p, p_handle );
        inherit( q, q_handle );
    }

    std::map<Handle, InconsistencyCause> conflicts;
    auto conflict = [ &conflicts ]( Handle h, const char* rule, const std::string& label ) {
        conflicts.emplace( h, InconsistencyCause{ rule, label, {} } );
    };

    for ( StateIndex i = 0; i < np; ++i )
        for ( StateIndex j = 0; j < nq; ++j )
        {
            const Handle h = at( i, j );

            for ( const auto& o : alphabet.outputs )
            {
                // (Must1) / (F1)
                for ( const auto& targets : p.must_targets( i, o ) )
                {
                    const auto& partners = wq.weak( j, o );
                    if ( partners.empty() )
                    {
                        conflict( h, "F1", o );
                        continue;
                    }
                    std::vector<Handle> ts;
                    for ( StateIndex x : targets )
                        for ( StateIndex y : partners )
                            ts.push_back( at( x, y ) );
                    b.add_must( h, o, std::move( ts ) );
                }
                // (Must2) / (F2)
                for ( const auto& targets : q.must_targets( j, o ) )
                {
                    const auto& partners = wp.weak( i, o );
                    if ( partners.empty() )
                    {
                        conflict( h, "F2", o );
                        continue;
                    }
                    std::vector<Handle> ts;
                    for ( StateIndex x : partners )
                        for ( StateIndex y : targets )
                            ts.push_back( at( x, y ) );
                    b.add_must( h, o, std::move( ts ) );
                }
                // (May3) on visible actions
                for ( StateIndex x : wp.weak( i, o ) )
                    for ( StateIndex y : wq.weak( j, o ) )
                        b.add_may( h, o, at( x, y ) );
            }

            // (May1), (May2), (May3) on tau
            const auto& ptau = wp.weak( i, tau );
            const auto& qtau = wq.weak( j, tau );
            for ( StateIndex x : ptau )
                b.add_may( h, std::string( tau ), at( x, j ) );
            for ( StateIndex y : qtau )
                b.add_may( h, std::string( tau ), at( i, y ) );
            for ( StateIndex x : ptau )
                for ( StateIndex y : qtau )
                    b.add_may( h, std::string( tau ), at( x, y ) );

            if ( !with_components )
                continue;

            for ( const auto& in : alphabet.inputs )
            {
                const auto pm = p.must_targets( i, in );
                const auto qm = q.must_targets( j, in );
                // (IMust1), (IMust2), (IMust3)
                if ( qm.empty() )
                    for ( const auto& targets : pm )
                    {
                        std::vector<Handle> ts;
                        for ( StateIndex x : targets )
                            ts.push_back( p_handle[ x ] );
                        b.add_must( h, in, std::move( ts ) );
                    }
                if ( pm.empty() )
                    for ( const auto& targets : qm )
                    {
                        std::vector<Handle> ts;
                        for ( StateIndex y : targets )
                            ts.push_back( q_handle[ y ] );
                        b.add_must( h, in, std::move( ts ) );
                    }
                for ( const auto& pt : pm )
                    for ( const auto& qt : qm )
                    {
                        std::vector<Handle> ts;
                        for ( StateIndex x : pt )
                            for ( StateIndex y : qt )
                                ts.push_back( at( x, y ) );
                        b.add_must( h, in, std::move( ts ) );
                    }

                // (IMay1), (IMay2), (IMay3)
                const auto pv = p.may_targets( i, in );
                const auto qv = q.may_targets( j, in );
                if ( qv.empty() )
                    for ( StateIndex x : pv )
                        b.add_may( h, in, p_handle[ x ] );
                if ( pv.empty() )
                    for ( StateIndex y : qv )
                        b.add_may( h, in, q_handle[ y ] );
                for ( StateIndex x : pv )
                    for ( StateIndex y : qv )
                        b.add_may( h, in, at( x, y ) );
            }
        }

    ConjunctiveProduct product{ b.build(), {}, {}, {} };
    const ModalAutomaton& a = product.automaton;
    product.paired.assign( a.size(), false );
    product.origin.assign( a.size(), std::nullopt );
    for ( StateIndex i = 0; i < np; ++i )
        for ( StateIndex j = 0; j < nq; ++j )
        {
            StateIndex s = *a.find( b.state( at( i, j ) ) );
            product.paired[ s ] = true;
            product.origin[ s ] = std::pair{ p_back[ i ], q_back[ j ] };
        }
    for ( const auto& [ h, cause ] : conflicts )
        product.local_conflicts.emplace( *a.find( b.state( h ) ), cause );
    return product;
}

ModalAutomaton disjunction( const ModalAutomaton& p0, const ModalAutomaton& q0, bool guard_inputs )
{
    auto [ p, q ] = rename_disjoint( p0, q0 );
    const Alphabet& alphabet = p.alphabet();

    using Handle = AutomatonBuilder::Handle;
    AutomatonBuilder b( p.flavor(), combined_name( p0, "or", q0 ), alphabet );
    std::vector<Handle> p_handle;
    std::vector<Handle> q_handle;
    for ( const auto& s : p.states() )
        p_handle.push_back( b.add_state( s ) );
    for ( const auto& s : q.states() )
        q_handle.push_back( b.add_state( s ) );
    auto inherit = [ &b ]( const ModalAutomaton& c, const std::vector<Handle>& h ) {
        for ( const auto& t : c.mays() )
            b.add_may( h[ t.source ], t.label, h[ t.target ] );
        for ( const auto& t : c.musts() )
        {
            std::vector<Handle> ts;
            for ( StateIndex x : t.targets )
                ts.push_back( h[ x ] );
            b.add_must( h[ t.source ], t.label, std::move( ts ) );
        }
    };
    inherit( p, p_handle );
    inherit( q, q_handle );

    for ( StateIndex i = 0; i < p.size(); ++i )
        for ( StateIndex j = 0; j < q.size(); ++j )
        {
            const Handle h = b.add_state( StateName::vee( p.state( i ), q.state( j ) ) );
            if ( i == p.initial() && j == q.initial() )
                b.set_initial( h );

            // (Must)
            for ( const auto& [ label, psets ] : p.must_out( i ) )
                for ( const auto& qt : q.must_targets( j, label ) )
                    for ( const auto& pt : psets )
                    {
                        std::vector<Handle> ts;
                        for ( StateIndex x : pt )
                            ts.push_back( p_handle[ x ] );
                        for ( StateIndex y : qt )
                            ts.push_back( q_handle[ y ] );
                        b.add_must( h, label, std::move( ts ) );
                    }

            // (May1), (May2)
            for ( const auto& [ label, targets ] : p.may_out( i ) )
            {
                if ( guard_inputs && alphabet.is_input( label ) && !q.has_may( j, label ) )
                    continue;
                for ( StateIndex x : targets )
                    b.add_may( h, label, p_handle[ x ] );
            }
            for ( const auto& [ label, targets ] : q.may_out( j ) )
            {
                if ( guard_inputs && alphabet.is_input( label ) && !p.has_may( i, label ) )
                    continue;
                for ( StateIndex y : targets )
                    b.add_may( h, label, q_handle[ y ] );
            }
        }
    return b.build();
}

} // namespace detail

bool InconsistencySet::contains( StateIndex s ) const
{
    return std::binary_search( members.begin(), members.end(), s );
}

InconsistencySet inconsistency_set( const ConjunctiveProduct& product )
{
    const ModalAutomaton& a = product.automaton;
    const auto& musts = a.musts();

    std::vector<bool> in_f( a.size(), false );
    std::vector<std::size_t> alive( musts.size() );
    std::vector<std::vector<std::size_t>> containing( a.size() );
    for ( std::size_t m = 0; m < musts.size(); ++m )
    {
        alive[ m ] = musts[ m ].targets.size();
        for ( StateIndex t : musts[ m ].targets )
            containing[ t ].push_back( m );
    }

    InconsistencySet f;
    std::deque<StateIndex> work;
    auto add = [ & ]( StateIndex s, InconsistencyCause cause ) {
        if ( in_f[ s ] || !product.paired.at( s ) )
            return;
        in_f[ s ] = true;
        f.provenance.emplace( s, std::move( cause ) );
        work.push_back( s );
    };

    for ( const auto& [ s, cause ] : product.local_conflicts )
        add( s, cause );

    while ( !work.empty() )
    {
        StateIndex s = work.front();
        work.pop_front();
        for ( std::size_t m : containing[ s ] )
            if ( --alive[ m ] == 0 )
                add( musts[ m ].source, { "F3", musts[ m ].label, musts[ m ].targets } );
    }

    for ( StateIndex s = 0; s < a.size(); ++s )
        if ( in_f[ s ] )
            f.members.push_back( s );
    return f;
}

std::optional<ModalAutomaton> delete_inconsistent( const ConjunctiveProduct& product, const InconsistencySet& f )
{
    if ( f.contains( product.automaton.initial() ) )
        return std::nullopt;
    AutomatonBuilder b( product.automaton );
    b.remove_states( std::vector<AutomatonBuilder::Handle>( f.members.begin(), f.members.end() ) );
    return b.build();
}

bool is_witness( const ConjunctiveProduct& product, const std::vector<StateIndex>& w )
{
    const ModalAutomaton& a = product.automaton;
    std::vector<bool> member( a.size(), false );
    for ( StateIndex s : w )
    {
        if ( s >= a.size() )
            return false;
        member[ s ] = true;
    }
    for ( StateIndex s : w )
    {
        if ( !product.paired.at( s ) )
            continue;
        if ( product.local_conflicts.contains( s ) )
            return false;
        for ( const auto& [ label, sets ] : a.must_out( s ) )
            for ( const auto& targets : sets )
                if ( std::none_of( targets.begin(), targets.end(), [ & ]( StateIndex t ) { return member[ t ]; } ) )
                    return false;
    }
    return true;
}

} // namespace modint
