#include "modint/embeddings.hpp"

#include "modint/errors.hpp"

namespace modint
{

StateName universal_state( const ModalAutomaton& ia )
{
    return StateName::universal( ia.name() );
}

ModalAutomaton embed_ia_to_dmts( const ModalAutomaton& ia )
{
    require_valid( ia, Flavor::IA, "embedded automaton" );
    const StateName u = universal_state( ia );
    if ( ia.find( u ) )
        throw InvalidAutomaton( "state " + u.str() + " is reserved for the universal state", {} );

    Alphabet actions;
    actions.outputs = ia.alphabet().actions();
    AutomatonBuilder b( Flavor::DMTS, ia.name(), actions );
    std::vector<AutomatonBuilder::Handle> h;
    for ( const auto& s : ia.states() )
        h.push_back( b.add_state( s ) );
    const auto hu = b.add_state( u );
    b.set_initial( h[ ia.initial() ] );

    for ( const auto& t : ia.mays() )
    {
        b.add_may( h[ t.source ], t.label, h[ t.target ] );
        if ( ia.alphabet().is_input( t.label ) )
            b.add_must( h[ t.source ], t.label, { h[ t.target ] } );
    }
    for ( StateIndex s = 0; s < ia.size(); ++s )
        for ( const auto& i : ia.alphabet().inputs )
            if ( !ia.has_may( s, i ) )
                b.add_may( h[ s ], i, hu );
    for ( const auto& a : actions.outputs )
        b.add_may( hu, a, hu );
    return b.build();
}

ModalAutomaton embed_ia_to_mia( const ModalAutomaton& ia )
{
    require_valid( ia, Flavor::IA, "embedded automaton" );
    AutomatonBuilder b( ia );
    b.set_flavor( Flavor::MIA );
    return b.build();
}

} // namespace modint
