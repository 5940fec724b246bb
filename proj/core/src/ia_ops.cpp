#include "modint/ia_ops.hpp"

#include "op_support.hpp"

namespace modint
{

namespace
{

using Handle = AutomatonBuilder::Handle;

std::vector<Handle> add_component( AutomatonBuilder& b, const ModalAutomaton& c )
{
    std::vector<Handle> h;
    for ( const auto& s : c.states() )
        h.push_back( b.add_state( s ) );
    for ( const auto& t : c.mays() )
        b.add_ia( h[ t.source ], t.label, h[ t.target ] );
    return h;
}

} // namespace

ModalAutomaton ia_conjoin( const ModalAutomaton& p0, const ModalAutomaton& q0 )
{
    detail::require_same_alphabet( p0, q0, Flavor::IA, "IA conjunction" );
    auto [ p, q ] = rename_disjoint( p0, q0 );
    const Alphabet& alphabet = p.alphabet();
    AutomatonBuilder b( Flavor::IA, detail::combined_name( p0, "and", q0 ), alphabet );
    const auto ph = add_component( b, p );
    const auto qh = add_component( b, q );

    std::vector<Handle> wedge( p.size() * q.size() );
    for ( StateIndex i = 0; i < p.size(); ++i )
        for ( StateIndex j = 0; j < q.size(); ++j )
            wedge[ i * q.size() + j ] = b.add_state( StateName::wedge( p.state( i ), q.state( j ) ) );
    auto at = [ & ]( StateIndex i, StateIndex j ) { return wedge[ i * q.size() + j ]; };
    b.set_initial( at( p.initial(), q.initial() ) );

    for ( StateIndex i = 0; i < p.size(); ++i )
        for ( StateIndex j = 0; j < q.size(); ++j )
        {
            const Handle h = at( i, j );
            for ( const auto& a : alphabet.inputs )
            {
                const auto pt = p.may_targets( i, a );
                const auto qt = q.may_targets( j, a );
                // (I1), (I2), (I3)
                if ( qt.empty() )
                    for ( StateIndex x : pt )
                        b.add_ia( h, a, ph[ x ] );
                if ( pt.empty() )
                    for ( StateIndex y : qt )
                        b.add_ia( h, a, qh[ y ] );
                for ( StateIndex x : pt )
                    for ( StateIndex y : qt )
                        b.add_ia( h, a, at( x, y ) );
            }
            // (O)
            for ( const auto& o : alphabet.outputs )
                for ( StateIndex x : p.may_targets( i, o ) )
                    for ( StateIndex y : q.may_targets( j, o ) )
                        b.add_ia( h, o, at( x, y ) );
            // (T1), (T2)
            for ( StateIndex x : p.may_targets( i, tau ) )
                b.add_ia( h, std::string( tau ), at( x, j ) );
            for ( StateIndex y : q.may_targets( j, tau ) )
                b.add_ia( h, std::string( tau ), at( i, y ) );
        }
    return b.build();
}

ModalAutomaton ia_disjoin( const ModalAutomaton& p0, const ModalAutomaton& q0 )
{
    detail::require_same_alphabet( p0, q0, Flavor::IA, "IA disjunction" );
    auto [ p, q ] = rename_disjoint( p0, q0 );
    const Alphabet& alphabet = p.alphabet();
    AutomatonBuilder b( Flavor::IA, detail::combined_name( p0, "or", q0 ), alphabet );
    const auto ph = add_component( b, p );
    const auto qh = add_component( b, q );

    std::vector<Handle> vee( p.size() * q.size() );
    for ( StateIndex i = 0; i < p.size(); ++i )
        for ( StateIndex j = 0; j < q.size(); ++j )
            vee[ i * q.size() + j ] = b.add_state( StateName::vee( p.state( i ), q.state( j ) ) );
    auto at = [ & ]( StateIndex i, StateIndex j ) { return vee[ i * q.size() + j ]; };
    b.set_initial( at( p.initial(), q.initial() ) );

    for ( StateIndex i = 0; i < p.size(); ++i )
        for ( StateIndex j = 0; j < q.size(); ++j )
        {
            const Handle h = at( i, j );
            // (I)
            for ( const auto& a : alphabet.inputs )
                for ( StateIndex x : p.may_targets( i, a ) )
                    for ( StateIndex y : q.may_targets( j, a ) )
                        b.add_ia( h, a, at( x, y ) );
            // (OT1), (OT2)
            for ( const auto& [ label, targets ] : p.may_out( i ) )
                if ( !alphabet.is_input( label ) )
                    for ( StateIndex x : targets )
                        b.add_ia( h, label, ph[ x ] );
            for ( const auto& [ label, targets ] : q.may_out( j ) )
                if ( !alphabet.is_input( label ) )
                    for ( StateIndex y : targets )
                        b.add_ia( h, label, qh[ y ] );
        }
    return b.build();
}

ParallelProduct ia_parallel_product( const ModalAutomaton& p1, const ModalAutomaton& p2, ParallelOptions options )
{
    return detail::parallel_product( p1, p2, Flavor::IA, options );
}

IncompatibilitySet ia_incompatible( const ParallelProduct& product, const ModalAutomaton& p1,
                                    const ModalAutomaton& p2 )
{
    return detail::incompatibility_set( product, p1, p2 );
}

CompositionResult ia_parallel_compose( const ModalAutomaton& p1, const ModalAutomaton& p2, ParallelOptions options )
{
    return detail::parallel_compose( p1, p2, Flavor::IA, options );
}

} // namespace modint
