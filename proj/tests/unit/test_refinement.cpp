#include "helpers.hpp"

#include <testkit/generate.hpp>
#include <testkit/oracle.hpp>

#include <doctest.h>

using namespace modint;

TEST_CASE( "blackhole refines every IA over its alphabet" )
{
    const auto bh = load( "blackhole.ia" );
    const auto others = {
        A( "ia X { inputs: a; outputs: ; initial x; }" ),
        A( "ia X { inputs: a; outputs: ; initial x; x -a-> y; y -tau-> x; y -a-> y; }" ),
        A( "ia X { inputs: a; outputs: ; initial x; x -tau-> y; y -tau-> x; }" ),
    };
    for ( const auto& x : others )
    {
        CHECK( ia_refines( bh, x ).holds );
        CHECK( testkit::oracle_refines( Flavor::IA, bh, x, bh.initial(), x.initial() ) );
    }
}

TEST_CASE( "IA output matched through a leading tau" )
{
    const auto impl = A( "ia I { inputs: ; outputs: o; initial p; p -o-> p1; }" );
    const auto spec = A( "ia S { inputs: ; outputs: o; initial q; q -tau-> q1; q1 -o-> q2; }" );
    CHECK( ia_refines( impl, spec ).holds );
    CHECK( testkit::oracle_refines( Flavor::IA, impl, spec, impl.initial(), spec.initial() ) );
    CHECK( ia_refines( spec, impl ).holds );
}

TEST_CASE( "IA spec inputs must be offered by the implementation" )
{
    const auto impl = A( "ia I { inputs: a; outputs: ; initial p; }" );
    const auto spec = A( "ia S { inputs: a; outputs: ; initial q; q -a-> q; }" );
    const auto w = ia_refines( impl, spec );
    CHECK_FALSE( w.holds );
    REQUIRE( w.failure );
    CHECK( w.failure->clause == "(i)" );
    CHECK( w.failure->label == "a" );
    CHECK( ia_refines( spec, impl ).holds );
}

TEST_CASE( "IA implementation outputs must be allowed by the specification" )
{
    const auto impl = A( "ia I { inputs: ; outputs: o; initial p; p -o-> p; }" );
    const auto spec = A( "ia S { inputs: ; outputs: o; initial q; }" );
    const auto w = ia_refines( impl, spec );
    CHECK_FALSE( w.holds );
    REQUIRE( w.failure );
    CHECK( w.failure->clause == "(ii)" );
    CHECK( w.failure->label == "o" );
}

TEST_CASE( "may-only dMTS refines itself" )
{
    const auto a = A( "dmts D { actions: a, b; initial s; may s -a-> t; may t -tau-> s; may t -b-> t; }" );
    const auto w = dmts_refines( a, a );
    CHECK( w.holds );
    CHECK( is_refinement_relation( RefinementKind::DMTS, a, a, w.pairs ) );
}

TEST_CASE( "missing must gives a clause (i) certificate" )
{
    const auto impl = A( "dmts I { actions: a; initial p; may p -a-> p; }" );
    const auto spec = A( "dmts S { actions: a; initial q; must q -a-> q; may q -a-> q; }" );
    const auto w = dmts_refines( impl, spec );
    CHECK_FALSE( w.holds );
    REQUIRE( w.failure );
    CHECK( w.failure->clause == "(i)" );
    CHECK( w.failure->label == "a" );
    CHECK( spec.state( w.failure->transition_source ).str() == "q" );
    CHECK( w.failure->chain.front() == StatePair{ impl.initial(), spec.initial() } );
}

TEST_CASE( "failure chain leads to the root cause" )
{
    const auto impl = A( "dmts I { actions: a, b; initial p; must p -a-> p1; may p -a-> p1; }" );
    const auto spec = A( "dmts S { actions: a, b; initial q; must q -a-> q1; may q -a-> q1; must q1 -b-> q2; "
                         "may q1 -b-> q2; }" );
    const auto w = dmts_refines( impl, spec );
    CHECK_FALSE( w.holds );
    REQUIRE( w.failure );
    CHECK( impl.state( w.failure->pair.impl ).str() == "p1" );
    CHECK( spec.state( w.failure->pair.spec ).str() == "q1" );
    CHECK( w.failure->label == "b" );
    REQUIRE( w.failure->chain.size() == 2 );
    CHECK( impl.state( w.failure->chain[ 0 ].impl ).str() == "p" );
}

TEST_CASE( "disjunctive must is matched with forall-exists" )
{
    const auto spec = A( "dmts S { actions: a, b; initial q; must q -a-> {q1,q2}; may q -a-> q1; may q -a-> q2; "
                         "must q1 -b-> q1; may q1 -b-> q1; }" );
    const auto to_q2 = A( "dmts I { actions: a, b; initial p; must p -a-> p1; may p -a-> p1; }" );
    const auto both = A( "dmts I { actions: a, b; initial p; must p -a-> {p1,p2}; may p -a-> p1; may p -a-> p2; "
                         "must p2 -b-> p2; may p2 -b-> p2; }" );
    CHECK( dmts_refines( to_q2, spec ).holds );
    CHECK( dmts_refines( both, spec ).holds );
    const auto bad = A( "dmts I { actions: a, b; initial p; must p -a-> {p1,p2}; may p -a-> p1; may p -a-> p2; "
                        "may p2 -b-> p2; may p1 -b-> p1; may p1 -a-> p1; }" );
    CHECK_FALSE( dmts_refines( bad, spec ).holds );
}

TEST_CASE( "common implementations of the two-branch conjunction" )
{
    const auto c = dmts_conjoin( load( "two_impls_p.dmts" ), load( "two_impls_q.dmts" ) );
    REQUIRE( c.defined() );
    for ( const auto* f : { "two_impls_r.dmts", "two_impls_s.dmts" } )
    {
        const auto r = load( f );
        CHECK( dmts_refines( r, *c.automaton ).holds );
        CHECK( testkit::oracle_refines( Flavor::DMTS, r, *c.automaton, r.initial(), c.automaton->initial() ) );
        CHECK( dmts_refines( r, load( "two_impls_p.dmts" ) ).holds );
        CHECK( dmts_refines( r, load( "two_impls_q.dmts" ) ).holds );
    }
}

TEST_CASE( "MIA inputs are allowed implicitly" )
{
    const auto impl = A( "mia I { inputs: i; outputs: o; initial p; must p -i-> p1; }" );
    const auto spec = A( "mia S { inputs: i; outputs: o; initial q; }" );
    CHECK( mia_refines( impl, spec ).holds );
    CHECK_FALSE( dmts_refines( underlying_dmts( impl ), underlying_dmts( spec ) ).holds );
}

TEST_CASE( "MIA output must is required" )
{
    const auto impl = A( "mia I { inputs: ; outputs: o; initial p; }" );
    const auto spec = A( "mia S { inputs: ; outputs: o; initial q; must q -o-> q1; may q -o-> q1; }" );
    const auto w = mia_refines( impl, spec );
    CHECK_FALSE( w.holds );
    REQUIRE( w.failure );
    CHECK( w.failure->clause == "(i)" );
}

TEST_CASE( "dropping the output after the input is a refinement" )
{
    const auto q = load( "forbidden_input_q.mia" );
    const auto q2 = load( "forbidden_input_q2.mia" );
    CHECK( mia_refines( q2, q ).holds );
    CHECK( dmts_refines( underlying_dmts( q2 ), underlying_dmts( q ) ).holds );
    CHECK( testkit::oracle_refines( Flavor::MIA, q2, q, q2.initial(), q.initial() ) );
    CHECK_FALSE( mia_refines( q, q2 ).holds );
}

TEST_CASE( "mia_equiv" )
{
    const auto a = load( "inclusive_or_r.mia" );
    CHECK( mia_equiv( a, a ) );
    const auto with = A( "mia X { inputs: ; outputs: o; initial s; must s -o-> t; may s -o-> t; }" );
    const auto without = A( "mia X { inputs: ; outputs: o; initial s; may s -o-> t; }" );
    CHECK_FALSE( mia_equiv( with, without ) );
    CHECK( mia_refines( with, without ).holds );
}

TEST_CASE( "refinement rejects mixed flavors and alphabets" )
{
    const auto ia = load( "blackhole.ia" );
    const auto mia = embed_ia_to_mia( ia );
    CHECK_THROWS_AS( (void)refines( ia, mia ), FlavorMismatch );
    CHECK_THROWS_AS( (void)ia_refines( ia, A( "ia X { inputs: b; outputs: ; initial x; }" ) ), AlphabetMismatch );
    CHECK_THROWS_AS( (void)dmts_refines( A( "dmts X { actions: a; initial x; }" ),
                                         A( "dmts X { actions: b; initial x; }" ) ),
                     AlphabetMismatch );
    CHECK_THROWS_AS( (void)mia_refines( load( "nondet_input_p.mia" ), load( "nondet_input_q.mia" ) ),
                     InvalidAutomaton );
}

TEST_CASE( "whole relation agrees with the oracle and rechecks" )
{
    for ( Flavor f : { Flavor::IA, Flavor::DMTS, Flavor::MIA } )
        for ( std::uint64_t seed = 0; seed < 40; ++seed )
        {
            testkit::GenParams g;
            g.seed = seed;
            g.max_states = 4;
            const auto a = testkit::gen_random( f, g );
            g.seed = seed + 1000;
            g.alphabet = a.alphabet();
            const auto b = testkit::gen_random( f, g );
            const auto w = refines( a, b );
            CHECK( is_refinement_relation( w.kind, a, b, w.pairs ) );
            const auto expected = testkit::oracle_relation( f, a, b );
            for ( StateIndex p = 0; p < a.size(); ++p )
                for ( StateIndex q = 0; q < b.size(); ++q )
                    CHECK( w.contains( { p, q } ) == expected[ p * b.size() + q ] );
        }
}

TEST_CASE( "MIA refinement is coarser than dMTS refinement on the same transitions" )
{
    std::size_t dmts_holds = 0;
    for ( std::uint64_t seed = 0; seed < 300; ++seed )
    {
        testkit::GenParams g;
        g.seed = seed;
        const auto a = testkit::gen_random( Flavor::MIA, g );
        g.seed = seed + 7777;
        g.alphabet = a.alphabet();
        const auto b = testkit::gen_random( Flavor::MIA, g );
        if ( dmts_refines( underlying_dmts( a ), underlying_dmts( b ) ).holds )
        {
            ++dmts_holds;
            CHECK( mia_refines( a, b ).holds );
        }
    }
    CHECK( dmts_holds > 0 );
}

TEST_CASE( "refinement from explicit states" )
{
    const auto spec = A( "dmts S { actions: a; initial q; must q -a-> q1; may q -a-> q1; }" );
    const auto impl = A( "dmts I { actions: a; initial p; may p -a-> p1; }" );
    CHECK_FALSE( refines( impl, spec ).holds );
    CHECK( refines( impl, spec, impl.initial(), spec.index_of( "q1" ) ).holds == false );
    CHECK( refines( impl, spec, impl.index_of( "p1" ), spec.index_of( "q1" ) ).holds );
    CHECK( refines( impl, spec, impl.index_of( "p1" ), spec.index_of( "q" ) ).holds == false );
}
