#include "helpers.hpp"

#include <doctest.h>
#include <testkit/generate.hpp>
#include <testkit/mutate.hpp>
#include <testkit/oracle.hpp>
#include <testkit/shrink.hpp>
#include <testkit/suites.hpp>

#include <filesystem>

using namespace modint;

namespace
{

const Flavor flavors[] = { Flavor::IA, Flavor::DMTS, Flavor::MIA };

} // namespace

TEST_CASE( "generation is deterministic and valid" )
{
    for ( auto f : flavors )
        for ( std::uint64_t seed = 0; seed < 200; ++seed )
        {
            testkit::GenParams params;
            params.seed = seed;
            params.max_states = 5;
            params.max_actions = 3;
            const auto a = testkit::gen_random( f, params );
            CHECK( a.flavor() == f );
            CHECK( validate( a ).empty() );
            CHECK( serialize( a ) == serialize( testkit::gen_random( f, params ) ) );
            CHECK( a.size() <= 5 );
        }
}

TEST_CASE( "density zero gives no transitions" )
{
    testkit::GenParams params;
    params.density = 0;
    params.input_probability = 0;
    for ( auto f : flavors )
    {
        const auto a = testkit::gen_random( f, params );
        CHECK( a.mays().empty() );
        CHECK( a.musts().empty() );
    }
}

TEST_CASE( "mutations stay valid and go in the promised direction" )
{
    for ( auto f : flavors )
        for ( std::uint64_t seed = 0; seed < 100; ++seed )
        {
            testkit::Rng rng( seed );
            testkit::GenParams params;
            params.seed = seed;
            const auto a = testkit::gen_random( f, params );
            const auto finer = testkit::refine_mutate( a, rng, 3 );
            const auto coarser = testkit::abstract_mutate( a, rng, 3 );
            CHECK( validate( finer ).empty() );
            CHECK( validate( coarser ).empty() );
            const auto ops = testkit::Operators::library();
            CHECK( ops.refines( finer, a ) );
            CHECK( ops.refines( a, coarser ) );
        }
}

TEST_CASE( "the game oracle agrees with the fixtures" )
{
    auto oracle = []( Flavor f, const ModalAutomaton& impl, const ModalAutomaton& spec ) {
        return testkit::oracle_refines( f, impl, spec, impl.initial(), spec.initial() );
    };
    CHECK( oracle( Flavor::DMTS, load( "two_impls_r.dmts" ), load( "golden/two_impls_and.dmts" ) ) );
    CHECK_FALSE( oracle( Flavor::MIA, load( "forbidden_input_q.mia" ), load( "forbidden_input_q2.mia" ) ) );
    CHECK( oracle( Flavor::MIA, load( "forbidden_input_q2.mia" ), load( "forbidden_input_q.mia" ) ) );
    CHECK( oracle( Flavor::IA, load( "blackhole.ia" ), load( "blackhole.ia" ) ) );
    testkit::GenParams params;
    params.max_states = testkit::oracle_state_limit + 1;
    params.exact_states = true;
    const auto big = testkit::gen_random( Flavor::DMTS, params );
    CHECK_THROWS_AS( (void)oracle( Flavor::DMTS, big, big ), testkit::OracleSizeLimit );
}

TEST_CASE( "shrinking keeps validity and the failure" )
{
    testkit::GenParams params;
    params.seed = 7;
    params.max_states = 6;
    params.exact_states = true;
    params.density = 2.0;
    const auto a = testkit::gen_random( Flavor::MIA, params );
    REQUIRE( a.mays().size() >= 2 );
    const auto small = testkit::shrink( { a }, []( const std::vector<ModalAutomaton>& xs ) {
        return !xs.front().mays().empty();
    } );
    REQUIRE( small.size() == 1 );
    CHECK( validate( small.front() ).empty() );
    CHECK( small.front().mays().size() == 1 );
    CHECK( small.front().size() <= 2 );
}

TEST_CASE( "suites pass on the library operators and are reproducible" )
{
    for ( const auto& name : testkit::suite_names() )
    {
        CAPTURE( name );
        const auto r = testkit::run_theorem_suite( name, 20, 1 );
        CHECK( r.ok() );
        CHECK( r.trials == 20 );
        CHECK( r.passed == 20 );
        const auto again = testkit::run_theorem_suite( name, 20, 1, { .threads = 3 } );
        CHECK( again.vacuous == r.vacuous );
        CHECK( again.invariant_checks == r.invariant_checks );
    }
    CHECK_THROWS_AS( (void)testkit::run_theorem_suite( "no-such-suite", 1, 0 ), std::invalid_argument );
}

TEST_CASE( "a broken conjunction is caught and dumped" )
{
    const auto dir = std::filesystem::temp_directory_path() / "modint_testkit_dump";
    std::filesystem::remove_all( dir );
    testkit::SuiteOptions options;
    options.results_dir = dir.string();
    options.ops.ia_conjoin = []( const ModalAutomaton& p, const ModalAutomaton& ) { return p; };
    const auto r = testkit::run_theorem_suite( "ia-glb", 50, 3, options );
    REQUIRE_FALSE( r.ok() );
    const auto& f = r.failures.front();
    CHECK_FALSE( f.counterexample.empty() );
    CHECK_FALSE( f.files.empty() );
    for ( const auto& file : f.files )
    {
        CHECK( std::filesystem::exists( file ) );
        if ( file.ends_with( ".ia" ) )
            CHECK( validate( read_file( file ) ).empty() );
    }
    std::filesystem::remove_all( dir );
}

TEST_CASE( "a broken pruning is caught by the invariant checks" )
{
    testkit::SuiteOptions options;
    options.ops.mia_compose = []( const ModalAutomaton& p, const ModalAutomaton& q ) {
        auto r = mia_parallel_compose( p, q );
        if ( !r.compatible() && r.product.automaton.size() > 0 )
            r.automaton = r.product.automaton;
        return r;
    };
    const auto r = testkit::run_theorem_suite( "mia-par", 100, 5, options );
    CHECK( r.invariant_failures > 0 );
    CHECK_FALSE( r.ok() );
}

TEST_CASE( "a refinement check that always holds disagrees with the oracle" )
{
    testkit::SuiteOptions options;
    options.ops.refines = []( const ModalAutomaton&, const ModalAutomaton& ) { return true; };
    for ( const auto* suite : { "oracle-ia", "oracle-dmts", "oracle-mia" } )
    {
        CAPTURE( suite );
        CHECK_FALSE( testkit::run_theorem_suite( suite, 100, 11, options ).ok() );
    }
}
