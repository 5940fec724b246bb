#include "helpers.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace modint;

namespace
{

std::string slurp( const std::filesystem::path& p )
{
    std::ifstream in( p );
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::filesystem::path> corpus_files()
{
    std::vector<std::filesystem::path> out;
    for ( const auto& e : std::filesystem::recursive_directory_iterator( MODINT_CORPUS_DIR ) )
        if ( e.is_regular_file() )
            out.push_back( e.path() );
    std::sort( out.begin(), out.end() );
    return out;
}

} // namespace

TEST_CASE( "every corpus file round-trips" )
{
    const auto files = corpus_files();
    CHECK( files.size() >= 30 );
    for ( const auto& f : files )
    {
        CAPTURE( f.string() );
        const auto a = read_file( f.string() );
        const auto text = serialize( a );
        const auto b = parse( text );
        CHECK( serialize( b ) == text );
        CHECK( b.name() == a.name() );
        CHECK( b.size() == a.size() );
        CHECK( b.mays().size() == a.mays().size() );
        CHECK( b.musts().size() == a.musts().size() );
    }
}

TEST_CASE( "golden files are in canonical form" )
{
    for ( const auto& f : corpus_files() )
        if ( f.parent_path().filename() == "golden" )
        {
            CAPTURE( f.string() );
            CHECK( serialize( read_file( f.string() ) ) == slurp( f ) );
        }
}

TEST_CASE( "ia shorthand: input transitions are musts with mays" )
{
    const auto b = A( "ia B { inputs: a; outputs: ; initial b; b -a-> b; }" );
    CHECK( b.flavor() == Flavor::IA );
    CHECK( b.size() == 1 );
    CHECK( b.has_must( 0, "a" ) );
    CHECK( b.has_may( 0, "a" ) );
    CHECK( validate( b ).empty() );
    CHECK( serialize( b ) == "ia B {\n  inputs: a;\n  outputs: ;\n  initial b;\n  b -a-> b;\n}\n" );
}

TEST_CASE( "disjunctive musts and label suffixes" )
{
    const auto m = A( "mia M { inputs: i; outputs: o; initial p;\n"
                      "  must p -o!-> {p1, p2};   # two possible targets\n"
                      "  may p -o!-> p1; may p -o-> p2;\n"
                      "  must p1 -i?-> p;\n}" );
    CHECK( must_sets( m, "p", "o" ) == std::vector<std::vector<std::string>>{ { "p1", "p2" } } );
    CHECK( targets( m, "p1", "i" ) == std::vector<std::string>{ "p" } );
    CHECK( validate( m ).empty() );
    CHECK_THROWS_AS( (void)A( "mia M { inputs: i; outputs: o; initial p; may p -i!-> p; }" ), ParseError );
    CHECK_THROWS_AS( (void)A( "mia M { inputs: i; outputs: o; initial p; may p -o?-> p; }" ), ParseError );
}

TEST_CASE( "validation problems are reported, not thrown" )
{
    CHECK_THROWS_AS( (void)A( "dmts D { actions: a; initial s; must s -tau-> s; }" ), ParseError );
    const auto e = A( "dmts D { actions: a; initial p; must p -a-> q; }" );
    CHECK( has_rule( e, "syntactic-consistency" ) );
    const auto u = A( "mia M { inputs: i; outputs: o; initial p; may p -i-> p; }" );
    CHECK( has_rule( u, "input-may-without-must" ) );
}

TEST_CASE( "parse errors carry positions" )
{
    auto position = []( std::string_view text ) -> std::pair<std::size_t, std::size_t> {
        try
        {
            (void)parse( text );
        }
        catch ( const ParseError& e )
        {
            return { e.line(), e.column() };
        }
        return { 0, 0 };
    };
    CHECK( position( "mia M {\n  inputs: i;\n  outputs: o;\n  initial p;\n  may p -o- p;\n}" ).first == 5 );
    CHECK( position( "xyz M { }" ) == std::pair<std::size_t, std::size_t>{ 1, 1 } );
    CHECK( position( "ia M { inputs: a; outputs: ; }" ).first == 1 );
    CHECK( position( "dmts D { actions: a; initial p; may p -a-> q;" ).first == 1 );
    CHECK( position( "dmts D { actions: a; initial p; } trailing" ).first == 1 );
    CHECK( position( "dmts D { actions: a; initial p; must p -a-> {}; }" ).first == 1 );
    CHECK( position( "ia I { inputs: a; outputs: a; initial p; }" ) == std::pair<std::size_t, std::size_t>{ 0, 0 } );
}

TEST_CASE( "locate points at the offending declaration" )
{
    const auto doc = parse_document( "mia M {\n  inputs: i;\n  outputs: o;\n  initial p;\n  may p -o-> q;\n"
                                     "  may p -i-> q;\n}\n" );
    const auto v = validate( doc.automaton );
    REQUIRE( v.size() == 1 );
    const auto span = locate( doc, v.front() );
    REQUIRE( span );
    CHECK( span->line == 6 );
    CHECK( span->column == 3 );
    CHECK( span->label == "i" );
}

TEST_CASE( "write_file and read_file agree" )
{
    const auto path = std::filesystem::temp_directory_path() / "modint_roundtrip.mia";
    const auto a = load( "inclusive_or_p.mia" );
    write_file( path.string(), a );
    CHECK( serialize( read_file( path.string() ) ) == serialize( a ) );
    std::filesystem::remove( path );
    CHECK_THROWS( (void)read_file( "/nonexistent/file.ia" ) );
}
