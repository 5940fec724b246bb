#include <benchmark/benchmark.h>
#include <modint/modint.hpp>

#include <random>
#include <string>

using namespace modint;

namespace
{

// n states over {a, b, c}; every state has a must on one label, mays on the
// others and a tau to its neighbour.
ModalAutomaton ring( Flavor flavor, std::size_t n, std::uint64_t seed )
{
    std::mt19937_64 rng( seed );
    AutomatonBuilder a( flavor, "R" + std::to_string( seed ),
                      flavor == Flavor::DMTS ? Alphabet{ {}, { "a", "b", "c" } } : Alphabet{ { "a" }, { "b", "c" } } );
    for ( std::size_t k = 0; k < n; ++k )
        (void)a.add_state( StateName::atom( "s" + std::to_string( k ) ) );
    a.set_initial( 0 );
    for ( std::size_t k = 0; k < n; ++k )
    {
        const auto next = ( k + 1 ) % n;
        const auto jump = static_cast<std::size_t>( rng() % n );
        a.add_must( k, "a", { next } );
        a.add_may( k, "a", next );
        if ( flavor == Flavor::IA )
        {
            a.add_may( k, "b", jump );
            a.add_may( k, "tau", next );
            continue;
        }
        a.add_may( k, "b", jump );
        a.add_may( k, "c", next );
        a.add_may( k, "tau", jump );
        if ( flavor == Flavor::DMTS && rng() % 2 )
            a.add_must( k, "c", { next } );
    }
    return a.build();
}

void refinement( benchmark::State& state, Flavor flavor )
{
    const auto n = static_cast<std::size_t>( state.range( 0 ) );
    const auto impl = ring( flavor, n, 1 );
    const auto spec = ring( flavor, n, 2 );
    for ( auto _ : state )
        benchmark::DoNotOptimize( refines( impl, spec ) );
    state.SetComplexityN( static_cast<std::int64_t>( n ) );
}

void dmts_conjunction( benchmark::State& state )
{
    const auto n = static_cast<std::size_t>( state.range( 0 ) );
    const auto p = ring( Flavor::DMTS, n, 3 );
    const auto q = ring( Flavor::DMTS, n, 4 );
    for ( auto _ : state )
        benchmark::DoNotOptimize( dmts_conjoin( p, q ) );
    state.SetComplexityN( static_cast<std::int64_t>( n ) );
}

void mia_conjunction( benchmark::State& state )
{
    const auto n = static_cast<std::size_t>( state.range( 0 ) );
    const auto p = ring( Flavor::MIA, n, 5 );
    const auto q = ring( Flavor::MIA, n, 6 );
    for ( auto _ : state )
        benchmark::DoNotOptimize( mia_conjoin( p, q ) );
}

void weak_closure( benchmark::State& state )
{
    const auto a = ring( Flavor::DMTS, static_cast<std::size_t>( state.range( 0 ) ), 7 );
    for ( auto _ : state )
        benchmark::DoNotOptimize( WeakClosure( a ) );
}

} // namespace

BENCHMARK_CAPTURE( refinement, ia, Flavor::IA )->RangeMultiplier( 2 )->Range( 8, 128 )->Complexity();
BENCHMARK_CAPTURE( refinement, dmts, Flavor::DMTS )->RangeMultiplier( 2 )->Range( 8, 128 )->Complexity();
BENCHMARK_CAPTURE( refinement, mia, Flavor::MIA )->RangeMultiplier( 2 )->Range( 8, 128 )->Complexity();
BENCHMARK( dmts_conjunction )->RangeMultiplier( 2 )->Range( 4, 32 )->Complexity();
BENCHMARK( mia_conjunction )->RangeMultiplier( 2 )->Range( 4, 32 );
BENCHMARK( weak_closure )->RangeMultiplier( 2 )->Range( 8, 256 );
BENCHMARK_MAIN();
