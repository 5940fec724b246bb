#include "helpers.hpp"

#include <doctest.h>

using namespace modint;

TEST_CASE( "dMTS embedding: enabled inputs become musts, missing ones lead to the universal state" )
{
    const auto p = A( "ia P { inputs: a, b; outputs: o; initial p; p -a-> p1; p1 -o-> p; }" );
    const auto e = embed_ia_to_dmts( p );
    CHECK( e.flavor() == Flavor::DMTS );
    CHECK( e.alphabet().inputs.empty() );
    CHECK( e.alphabet().actions() == std::set<std::string, std::less<>>{ "a", "b", "o" } );
    CHECK( validate( e ).empty() );
    CHECK( must_sets( e, "p", "a" ) == std::vector<std::vector<std::string>>{ { "p1" } } );
    CHECK( targets( e, "p", "a" ) == std::vector<std::string>{ "p1" } );
    CHECK( targets( e, "p", "b" ) == std::vector<std::string>{ "univ[P]" } );
    CHECK( targets( e, "p1", "a" ) == std::vector<std::string>{ "univ[P]" } );
    CHECK_FALSE( e.has_must( e.index_of( "p1" ), "o" ) );
    CHECK( targets( e, "p1", "o" ) == std::vector<std::string>{ "p" } );
    for ( const auto* x : { "a", "b", "o" } )
        CHECK( targets( e, "univ[P]", x ) == std::vector<std::string>{ "univ[P]" } );
    CHECK( e.must_out( e.index_of( "univ[P]" ) ).empty() );
    CHECK( targets( e, "univ[P]", "tau" ).empty() );
    for ( const auto& t : e.musts() )
        CHECK( t.targets.size() == 1 );
    CHECK( universal_state( p ).str() == "univ[P]" );
}

TEST_CASE( "dMTS embedding rejects a state clashing with the universal one" )
{
    const auto p = A( "ia P { inputs: a; outputs: ; initial univ[P]; }" );
    CHECK_THROWS_AS( (void)embed_ia_to_dmts( p ), InvalidAutomaton );
}

TEST_CASE( "MIA embedding of the blackhole" )
{
    const auto e = embed_ia_to_mia( load( "blackhole.ia" ) );
    CHECK( e.flavor() == Flavor::MIA );
    CHECK( e.size() == 1 );
    CHECK( must_sets( e, "b", "a" ) == std::vector<std::vector<std::string>>{ { "b" } } );
    CHECK( e.mays().size() == 1 );
    CHECK( validate( e ).empty() );
}

TEST_CASE( "dMTS embedding and conjunction: only one direction holds" )
{
    const auto p = load( "conj_embed_p.ia" );
    const auto q = load( "conj_embed_q.ia" );
    const auto conj = dmts_conjoin( embed_ia_to_dmts( p ), embed_ia_to_dmts( q ) );
    REQUIRE( conj.defined() );
    const auto embedded = embed_ia_to_dmts( ia_conjoin( p, q ) );
    CHECK( dmts_refines( embedded, *conj.automaton ).holds );
    CHECK_FALSE( dmts_refines( *conj.automaton, embedded ).holds );
}

TEST_CASE( "dMTS embedding and disjunction: only one direction holds" )
{
    const auto r = load( "or_after_input_r.ia" );
    const auto s = load( "or_after_input_s.ia" );
    const auto disj = dmts_disjoin( embed_ia_to_dmts( r ), embed_ia_to_dmts( s ) );
    const auto embedded = embed_ia_to_dmts( ia_disjoin( r, s ) );
    CHECK( dmts_refines( disj, embedded ).holds );
    CHECK_FALSE( dmts_refines( embedded, disj ).holds );
}

TEST_CASE( "embeddings keep the refinement verdict on the fixtures" )
{
    const std::vector<std::pair<std::string, std::string>> pairs = {
        { "or_commit_p.ia", "or_commit_q.ia" }, { "or_after_input_r.ia", "or_after_input_s.ia" },
        { "conj_embed_p.ia", "conj_embed_q.ia" }, { "blackhole.ia", "blackhole.ia" } };
    for ( const auto& [ a, b ] : pairs )
    {
        const auto p = load( a );
        const auto q = load( b );
        if ( p.alphabet() != q.alphabet() )
            continue;
        for ( const auto& [ x, y ] : { std::pair{ p, q }, std::pair{ q, p } } )
        {
            const bool ia = ia_refines( x, y ).holds;
            CHECK( mia_refines( embed_ia_to_mia( x ), embed_ia_to_mia( y ) ).holds == ia );
            CHECK( dmts_refines( embed_ia_to_dmts( x ), embed_ia_to_dmts( y ) ).holds == ia );
        }
    }
}
