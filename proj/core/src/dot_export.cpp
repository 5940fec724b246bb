#include "modint/dot_export.hpp"

#include <set>
#include <sstream>

namespace modint
{

namespace
{

std::string quote( const std::string& s )
{
    std::string out = "\"";
    for ( char c : s )
    {
        if ( c == '"' || c == '\\' )
            out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string decorate( const ModalAutomaton& a, const std::string& label )
{
    if ( a.flavor() == Flavor::DMTS || is_tau( label ) )
        return label;
    if ( a.alphabet().is_input( label ) )
        return label + "?";
    if ( a.alphabet().is_output( label ) )
        return label + "!";
    return label;
}

} // namespace

std::string export_dot( const ModalAutomaton& a )
{
    std::ostringstream out;
    out << "digraph " << quote( a.name() ) << " {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    for ( StateIndex s = 0; s < a.size(); ++s )
    {
        out << "  " << quote( a.state( s ).str() );
        if ( s == a.initial() )
            out << " [peripheries=2]";
        out << ";\n";
    }

    std::set<std::tuple<StateIndex, std::string, StateIndex>> under_must;
    std::size_t junctions = 0;
    for ( const auto& t : a.musts() )
    {
        const std::string label = quote( decorate( a, t.label ) );
        const std::string source = quote( a.state( t.source ).str() );
        for ( StateIndex x : t.targets )
            under_must.emplace( t.source, t.label, x );
        if ( t.targets.size() == 1 )
        {
            out << "  " << source << " -> " << quote( a.state( t.targets.front() ).str() ) << " [label=" << label
                << "];\n";
            continue;
        }
        const std::string j = quote( "__junction" + std::to_string( junctions++ ) );
        out << "  " << j << " [shape=point, width=0.08, label=\"\"];\n";
        out << "  " << source << " -> " << j << " [label=" << label << ", arrowhead=none];\n";
        for ( StateIndex x : t.targets )
            out << "  " << j << " -> " << quote( a.state( x ).str() ) << ";\n";
    }
    for ( const auto& t : a.mays() )
    {
        if ( under_must.contains( { t.source, t.label, t.target } ) )
            continue;
        out << "  " << quote( a.state( t.source ).str() ) << " -> " << quote( a.state( t.target ).str() )
            << " [label=" << quote( decorate( a, t.label ) ) << ", style=dashed];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace modint
