#include "modint_cli/cli.hpp"

#include <modint/modint.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace modint_cli
{

using namespace modint;

namespace
{

/// Raised for problems in the input files; reported with exit code 2.
struct InputProblem
{
    std::string message;
};

SourceDocument load_document( const std::string& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw InputProblem{ "cannot open " + path };
    std::ostringstream text;
    text << in.rdbuf();
    try
    {
        return parse_document( text.str() );
    }
    catch ( const ParseError& e )
    {
        throw InputProblem{ path + ":" + e.what() };
    }
}

std::vector<std::string> describe_violations( const std::string& path, const SourceDocument& doc )
{
    std::vector<std::string> lines;
    for ( const auto& v : validate( doc.automaton ) )
    {
        std::string where = path;
        if ( auto span = locate( doc, v ) )
            where += ":" + std::to_string( span->line ) + ":" + std::to_string( span->column );
        lines.push_back( where + ": " + v.rule + ": " + v.message );
    }
    return lines;
}

ModalAutomaton load( const std::string& path )
{
    SourceDocument doc = load_document( path );
    auto problems = describe_violations( path, doc );
    if ( !problems.empty() )
    {
        std::string message;
        for ( const auto& p : problems )
            message += ( message.empty() ? "" : "\n" ) + p;
        throw InputProblem{ message };
    }
    return std::move( doc.automaton );
}

void emit_text( const std::string& path, const std::string& text, std::ostream& out )
{
    if ( path == "-" )
    {
        out << text;
        return;
    }
    std::ofstream file( path, std::ios::binary );
    if ( !file )
        throw InputProblem{ "cannot write " + path };
    file << text;
}

StateIndex state_arg( const ModalAutomaton& a, const std::string& name, const std::string& role )
{
    if ( name.empty() )
        return a.initial();
    if ( auto s = a.find( std::string_view( name ) ) )
        return *s;
    throw InputProblem{ "no state " + name + " in " + role + " " + a.name() };
}

void print_failure( const RefinementWitness& w, const ModalAutomaton& impl, const ModalAutomaton& spec,
                    std::ostream& out )
{
    if ( !w.failure )
        return;
    const auto& f = *w.failure;
    out << "cause: " << impl.state( f.pair.impl ).str() << " vs " << spec.state( f.pair.spec ).str() << ", clause "
        << f.clause << " on " << f.label << ": ";
    const ModalAutomaton& owner = f.clause == "(i)" ? spec : impl;
    out << owner.state( f.transition_source ).str() << " -" << f.label << "-> ";
    if ( f.transition_targets.size() == 1 )
        out << owner.state( f.transition_targets.front() ).str();
    else
    {
        out << "{";
        for ( std::size_t k = 0; k < f.transition_targets.size(); ++k )
            out << ( k ? "," : "" ) << owner.state( f.transition_targets[ k ] ).str();
        out << "}";
    }
    out << ( f.clause == "(i)" ? " has no matching implementation must\n" : " has no weak match in the specification\n" );
    if ( f.chain.size() > 1 )
    {
        out << "chain:";
        for ( const auto& p : f.chain )
            out << " (" << impl.state( p.impl ).str() << "," << spec.state( p.spec ).str() << ")";
        out << "\n";
    }
}

ConjunctionResult conjunction_of( const ModalAutomaton& a, const ModalAutomaton& b )
{
    if ( a.flavor() != b.flavor() )
        throw FlavorMismatch( "operands have flavors " + std::string( to_string( a.flavor() ) ) + " and " +
                              std::string( to_string( b.flavor() ) ) );
    return a.flavor() == Flavor::DMTS ? dmts_conjoin( a, b ) : mia_conjoin( a, b );
}

ModalAutomaton disjunction_of( const ModalAutomaton& a, const ModalAutomaton& b )
{
    if ( a.flavor() != b.flavor() )
        throw FlavorMismatch( "operands have flavors " + std::string( to_string( a.flavor() ) ) + " and " +
                              std::string( to_string( b.flavor() ) ) );
    switch ( a.flavor() )
    {
    case Flavor::IA:
        return ia_disjoin( a, b );
    case Flavor::DMTS:
        return dmts_disjoin( a, b );
    case Flavor::MIA:
        return mia_disjoin( a, b );
    }
    return a;
}

void print_pruned( const CompositionResult& r, std::ostream& out )
{
    const ModalAutomaton& product = r.product.automaton;
    out << "incompatible:";
    for ( StateIndex s : r.incompatible_states.incompatible )
        out << " " << product.state( s ).str();
    out << "\n";
    for ( const auto& t : r.pruned )
    {
        out << "pruned " << t.kind << " " << product.state( t.source ).str() << " -" << t.label << "-> ";
        if ( t.kind == "must" )
        {
            out << "{";
            for ( std::size_t k = 0; k < t.targets.size(); ++k )
                out << ( k ? "," : "" ) << product.state( t.targets[ k ] ).str();
            out << "}";
        }
        else
            out << product.state( t.targets.front() ).str();
        out << "\n";
    }
}

} // namespace

int run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
    CLI::App app{ "Refinement checking and operators for interface automata and modal transition systems", "modint" };
    app.require_subcommand( 1 );

    std::function<int()> action;

    std::string file_a, file_b, output, impl_state, spec_state, target;
    bool witness = false, trim = false, emit_product = false, emit_pruned = false;

    auto* validate_cmd = app.add_subcommand( "validate", "Check the flavor invariants of a file" );
    validate_cmd->add_option( "FILE", file_a )->required();
    validate_cmd->callback( [ & ] {
        action = [ & ] {
            SourceDocument doc = load_document( file_a );
            auto problems = describe_violations( file_a, doc );
            for ( const auto& p : problems )
                err << p << "\n";
            if ( !problems.empty() )
                return int( Usage );
            out << file_a << ": valid " << to_string( doc.automaton.flavor() ) << ", " << doc.automaton.size()
                << ( doc.automaton.size() == 1 ? " state\n" : " states\n" );
            return int( Ok );
        };
    } );

    auto* refine_cmd = app.add_subcommand( "refine", "Decide whether IMPL refines SPEC" );
    refine_cmd->add_option( "IMPL", file_a )->required();
    refine_cmd->add_option( "SPEC", file_b )->required();
    refine_cmd->add_option( "--impl-state", impl_state, "Implementation state (default: initial)" );
    refine_cmd->add_option( "--spec-state", spec_state, "Specification state (default: initial)" );
    refine_cmd->add_flag( "--witness", witness, "Print the largest refinement relation" );
    refine_cmd->callback( [ & ] {
        action = [ & ] {
            const ModalAutomaton impl = load( file_a );
            const ModalAutomaton spec = load( file_b );
            const auto w = refines( impl, spec, state_arg( impl, impl_state, "implementation" ),
                                    state_arg( spec, spec_state, "specification" ) );
            out << ( w.holds ? "holds\n" : "fails\n" );
            if ( !w.holds )
                print_failure( w, impl, spec, out );
            if ( witness )
                for ( const auto& p : w.pairs )
                    out << impl.state( p.impl ).str() << " <= " << spec.state( p.spec ).str() << "\n";
            return int( w.holds ? Ok : Fails );
        };
    } );

    auto* equiv_cmd = app.add_subcommand( "equiv", "Decide refinement in both directions" );
    equiv_cmd->add_option( "A", file_a )->required();
    equiv_cmd->add_option( "B", file_b )->required();
    equiv_cmd->callback( [ & ] {
        action = [ & ] {
            const ModalAutomaton a = load( file_a );
            const ModalAutomaton b = load( file_b );
            const bool forward = refines( a, b ).holds;
            const bool backward = refines( b, a ).holds;
            if ( forward && backward )
            {
                out << "equivalent\n";
                return int( Ok );
            }
            out << "not equivalent: " << ( forward ? "B does not refine A" : "A does not refine B" ) << "\n";
            return int( Fails );
        };
    } );

    auto* conjoin_cmd = app.add_subcommand( "conjoin", "Conjunction of two specifications" );
    conjoin_cmd->add_option( "A", file_a )->required();
    conjoin_cmd->add_option( "B", file_b )->required();
    conjoin_cmd->add_option( "-o,--output", output, "Output file, - for stdout" )->required();
    conjoin_cmd->add_flag( "--trim", trim, "Drop states unreachable from the initial state" );
    conjoin_cmd->callback( [ & ] {
        action = [ & ] {
            const ModalAutomaton a = load( file_a );
            const ModalAutomaton b = load( file_b );
            std::optional<ModalAutomaton> result;
            if ( a.flavor() == Flavor::IA && b.flavor() == Flavor::IA )
                result = ia_conjoin( a, b );
            else
            {
                ConjunctionResult r = conjunction_of( a, b );
                if ( !r.defined() )
                {
                    err << "conjunction undefined: the initial pair is inconsistent\n";
                    return int( Undefined );
                }
                result = std::move( r.automaton );
            }
            emit_text( output, serialize( trim ? trim_unreachable( *result ) : *result ), out );
            return int( Ok );
        };
    } );

    auto* disjoin_cmd = app.add_subcommand( "disjoin", "Disjunction of two specifications" );
    disjoin_cmd->add_option( "A", file_a )->required();
    disjoin_cmd->add_option( "B", file_b )->required();
    disjoin_cmd->add_option( "-o,--output", output, "Output file, - for stdout" )->required();
    disjoin_cmd->add_flag( "--trim", trim, "Drop states unreachable from the initial state" );
    disjoin_cmd->callback( [ & ] {
        action = [ & ] {
            const ModalAutomaton result = disjunction_of( load( file_a ), load( file_b ) );
            emit_text( output, serialize( trim ? trim_unreachable( result ) : result ), out );
            return int( Ok );
        };
    } );

    auto* compose_cmd = app.add_subcommand( "compose", "Parallel composition with pruning" );
    compose_cmd->add_option( "A", file_a )->required();
    compose_cmd->add_option( "B", file_b )->required();
    compose_cmd->add_option( "-o,--output", output, "Output file, - for stdout" )->required();
    compose_cmd->add_flag( "--emit-product", emit_product, "Print the unpruned product on stdout" );
    compose_cmd->add_flag( "--emit-pruned-set", emit_pruned,
                           "Print the incompatible states and the pruned transitions on stdout" );
    compose_cmd->callback( [ & ] {
        action = [ & ] {
            const ModalAutomaton a = load( file_a );
            const ModalAutomaton b = load( file_b );
            if ( a.flavor() != b.flavor() || a.flavor() == Flavor::DMTS )
                throw FlavorMismatch( "parallel composition needs two ia or two mia files" );
            const CompositionResult r = a.flavor() == Flavor::IA ? ia_parallel_compose( a, b )
                                                                 : mia_parallel_compose( a, b );
            if ( emit_product )
                out << serialize( r.product.automaton );
            if ( emit_pruned )
                print_pruned( r, out );
            if ( !r.compatible() )
            {
                err << "incompatible: the initial pair can reach an error autonomously\n";
                return int( Undefined );
            }
            emit_text( output, serialize( *r.automaton ), out );
            return int( Ok );
        };
    } );

    auto* embed_cmd = app.add_subcommand( "embed", "Embed an ia file into dmts or mia" );
    embed_cmd->add_option( "A", file_a )->required();
    embed_cmd->add_option( "--into", target, "Target theory" )->required()->check( CLI::IsMember( { "dmts", "mia" } ) );
    embed_cmd->add_option( "-o,--output", output, "Output file, - for stdout" )->required();
    embed_cmd->callback( [ & ] {
        action = [ & ] {
            const ModalAutomaton a = load( file_a );
            const ModalAutomaton e = target == "dmts" ? embed_ia_to_dmts( a ) : embed_ia_to_mia( a );
            emit_text( output, serialize( e ), out );
            return int( Ok );
        };
    } );

    auto* dot_cmd = app.add_subcommand( "dot", "Export to Graphviz" );
    dot_cmd->add_option( "A", file_a )->required();
    dot_cmd->add_option( "-o,--output", output, "Output file, - for stdout" )->required();
    dot_cmd->callback( [ & ] {
        action = [ & ] {
            emit_text( output, export_dot( load( file_a ) ), out );
            return int( Ok );
        };
    } );

    try
    {
        std::vector<std::string> reversed( args.rbegin(), args.rend() );
        app.parse( reversed );
    }
    catch ( const CLI::CallForHelp& )
    {
        out << app.help();
        return Ok;
    }
    catch ( const CLI::CallForAllHelp& )
    {
        out << app.help( "", CLI::AppFormatMode::All );
        return Ok;
    }
    catch ( const CLI::ParseError& e )
    {
        err << "modint: " << e.what() << "\n" << "run with --help for usage\n";
        return Usage;
    }

    try
    {
        return action();
    }
    catch ( const InputProblem& e )
    {
        err << e.message << "\n";
    }
    catch ( const FlavorMismatch& e )
    {
        err << "flavor mismatch: " << e.what() << "\n";
    }
    catch ( const AlphabetMismatch& e )
    {
        err << "alphabet mismatch: " << e.what() << "\n";
    }
    catch ( const NotComposable& e )
    {
        err << "not composable: " << e.what() << "\n";
    }
    catch ( const InvalidAutomaton& e )
    {
        err << e.what() << "\n";
        for ( const auto& d : e.details() )
            err << "  " << d << "\n";
    }
    catch ( const std::exception& e )
    {
        err << "error: " << e.what() << "\n";
    }
    return Usage;
}

} // namespace modint_cli
