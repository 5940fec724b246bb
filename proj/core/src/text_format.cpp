#include "modint/text_format.hpp"

#include "modint/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace modint
{

namespace
{

bool is_name_char( char c )
{
    return is_ident_char( c ) || c == '(' || c == ')' || c == '&' || c == '|' || c == '@' || c == '[' || c == ']' ||
           c == ',';
}

class Parser
{
public:
    explicit Parser( std::string_view text ) : _text( text ) {}

    SourceDocument run()
    {
        skip();
        const auto [ fl, fc ] = here();
        std::string flavor_word = word( "flavor" );
        if ( flavor_word == "ia" )
            _flavor = Flavor::IA;
        else if ( flavor_word == "dmts" )
            _flavor = Flavor::DMTS;
        else if ( flavor_word == "mia" )
            _flavor = Flavor::MIA;
        else
            throw ParseError( fl, fc, "expected 'ia', 'dmts' or 'mia', found '" + flavor_word + "'" );
        skip();
        _name = word( "automaton name" );
        expect( '{' );

        bool initial_seen = false;
        while ( true )
        {
            skip();
            if ( at_end() )
                fail( "unexpected end of input, missing '}'" );
            if ( peek() == '}' )
            {
                advance();
                break;
            }
            statement( initial_seen );
        }
        skip();
        if ( !at_end() )
            fail( "unexpected text after '}'" );
        if ( !initial_seen )
            throw ParseError( fl, fc, "automaton " + _name + " declares no initial state" );
        return finish();
    }

private:
    struct Trans
    {
        std::string kind; // may, must, bare
        StateName source;
        std::string label;
        std::vector<StateName> targets;
        bool set_target = false;
        std::size_t line;
        std::size_t column;
    };

    void statement( bool& initial_seen )
    {
        const auto [ line, column ] = here();
        const std::size_t mark = _pos;
        const std::size_t mark_line = _line;
        const std::size_t mark_col = _col;

        if ( is_ident_char( peek() ) )
        {
            std::string w = word( "statement" );
            skip();
            const char next = at_end() ? '\0' : peek();
            if ( ( w == "inputs" || w == "outputs" || w == "actions" || w == "states" ) && next == ':' )
            {
                advance();
                alphabet_or_states( w, line, column );
                return;
            }
            if ( w == "initial" && next != '-' )
            {
                StateName s = state_name();
                expect( ';' );
                if ( initial_seen && !( *_initial == s ) )
                    throw ParseError( line, column, "second initial state " + s.str() );
                initial_seen = true;
                _initial = s;
                note_state( s );
                _spans.push_back( { line, column, "initial", s, std::nullopt } );
                return;
            }
            if ( ( w == "may" || w == "must" ) && next != '-' )
            {
                transition( w, line, column );
                return;
            }
            // A state that happens to look like a keyword.
            _pos = mark;
            _line = mark_line;
            _col = mark_col;
        }
        transition( "bare", line, column );
    }

    void alphabet_or_states( const std::string& which, std::size_t line, std::size_t column )
    {
        if ( which == "actions" && _flavor != Flavor::DMTS )
            throw ParseError( line, column, "'actions' is only allowed in dmts files" );
        if ( ( which == "inputs" || which == "outputs" ) && _flavor == Flavor::DMTS )
            throw ParseError( line, column, "'" + which + "' is not allowed in dmts files, use 'actions'" );

        skip();
        std::vector<std::string> items;
        std::vector<StateName> states;
        if ( peek() != ';' )
            while ( true )
            {
                skip();
                if ( which == "states" )
                    states.push_back( state_name() );
                else
                {
                    const auto [ l, c ] = here();
                    std::string a = word( "action name" );
                    if ( a == tau )
                        throw ParseError( l, c, "tau cannot be declared as an action" );
                    items.push_back( a );
                }
                skip();
                if ( peek() == ',' )
                {
                    advance();
                    continue;
                }
                break;
            }
        expect( ';' );

        if ( which == "states" )
            for ( auto& s : states )
                note_state( s );
        auto& target = which == "inputs" ? _alphabet.inputs : _alphabet.outputs;
        for ( auto& a : items )
            target.insert( a );
        _spans.push_back( { line, column, which == "states" ? "states" : "alphabet", std::nullopt, std::nullopt } );
    }

    void transition( const std::string& kind, std::size_t line, std::size_t column )
    {
        if ( kind == "bare" && _flavor != Flavor::IA )
            throw ParseError( line, column, "transitions without 'may' or 'must' are only allowed in ia files" );
        skip();
        Trans t{ kind, state_name(), {}, {}, false, line, column };
        skip();
        expect( '-' );
        const auto [ ll, lc ] = here();
        t.label = word( "label" );
        if ( !at_end() && ( peek() == '?' || peek() == '!' ) )
        {
            const char mark = peek();
            advance();
            if ( t.label == tau )
                throw ParseError( ll, lc, "tau takes no '?' or '!' suffix" );
            if ( _flavor == Flavor::DMTS )
                throw ParseError( ll, lc, "dmts labels take no '?' or '!' suffix" );
            _decorations.emplace_back( t.label, mark, ll, lc );
        }
        if ( kind == "must" && t.label == tau )
            throw ParseError( ll, lc, "tau cannot label a must-transition" );
        expect( '-' );
        expect( '>' );
        skip();
        if ( peek() == '{' )
        {
            if ( _flavor == Flavor::IA )
                throw ParseError( _line, _col, "set targets are not allowed in ia files" );
            advance();
            t.set_target = true;
            while ( true )
            {
                skip();
                t.targets.push_back( state_name() );
                skip();
                if ( peek() == ',' )
                {
                    advance();
                    continue;
                }
                break;
            }
            expect( '}' );
            if ( kind == "may" && t.targets.size() != 1 )
                throw ParseError( line, column, "a may-transition has exactly one target" );
        }
        else
            t.targets.push_back( state_name() );
        expect( ';' );

        note_state( t.source );
        for ( const auto& s : t.targets )
            note_state( s );
        _spans.push_back(
                { line, column, kind == "bare" ? "transition" : kind, t.source, std::optional<std::string>( t.label ) } );
        _trans.push_back( std::move( t ) );
    }

    SourceDocument finish()
    {
        for ( const auto& [ label, mark, l, c ] : _decorations )
        {
            const bool ok = mark == '?' ? _alphabet.is_input( label ) : _alphabet.is_output( label );
            if ( !ok )
                throw ParseError( l, c,
                                  "label " + label + mark + " does not match the declared " +
                                          ( mark == '?' ? "inputs" : "outputs" ) );
        }

        AutomatonBuilder b( _flavor, _name, _alphabet );
        for ( const auto& s : _order )
            b.add_state( s );
        auto h = [ &b ]( const StateName& s ) { return *b.find( s ); };
        b.set_initial( h( *_initial ) );
        const bool io = _flavor != Flavor::DMTS;
        for ( const auto& t : _trans )
        {
            if ( t.kind == "bare" )
                b.add_ia( h( t.source ), t.label, h( t.targets.front() ) );
            else if ( t.kind == "may" )
                b.add_may( h( t.source ), t.label, h( t.targets.front() ) );
            else
            {
                std::vector<AutomatonBuilder::Handle> ts;
                for ( const auto& s : t.targets )
                    ts.push_back( h( s ) );
                b.add_must( h( t.source ), t.label, ts );
                if ( io && _alphabet.is_input( t.label ) )
                    for ( auto x : ts )
                        b.add_may( h( t.source ), t.label, x );
            }
        }
        return { std::string( _text ), b.build(), std::move( _spans ) };
    }

    void note_state( const StateName& s )
    {
        if ( _seen.insert( s.str() ).second )
            _order.push_back( s );
    }

    StateName state_name()
    {
        skip();
        const auto [ line, column ] = here();
        std::size_t start = _pos;
        int depth = 0;
        while ( !at_end() )
        {
            char c = peek();
            if ( !is_name_char( c ) )
                break;
            if ( c == ',' && depth == 0 )
                break;
            if ( c == '(' || c == '[' )
                ++depth;
            if ( c == ')' || c == ']' )
            {
                if ( depth == 0 )
                    break;
                --depth;
            }
            advance();
        }
        std::string_view text = _text.substr( start, _pos - start );
        if ( text.empty() )
            throw ParseError( line, column, "expected a state name" );
        try
        {
            return StateName::parse( text );
        }
        catch ( const std::invalid_argument& e )
        {
            throw ParseError( line, column, e.what() );
        }
    }

    std::string word( const char* what )
    {
        const auto [ line, column ] = here();
        std::size_t start = _pos;
        while ( !at_end() && is_ident_char( peek() ) )
            advance();
        if ( start == _pos )
            throw ParseError( line, column, std::string( "expected " ) + what );
        return std::string( _text.substr( start, _pos - start ) );
    }

    void expect( char c )
    {
        skip();
        if ( at_end() || peek() != c )
            fail( std::string( "expected '" ) + c + "'" );
        advance();
    }

    [[noreturn]] void fail( const std::string& message ) const { throw ParseError( _line, _col, message ); }

    void skip()
    {
        while ( !at_end() )
        {
            char c = peek();
            if ( c == '#' )
            {
                while ( !at_end() && peek() != '\n' )
                    advance();
            }
            else if ( std::isspace( static_cast<unsigned char>( c ) ) )
                advance();
            else
                break;
        }
    }

    [[nodiscard]] bool at_end() const { return _pos >= _text.size(); }
    [[nodiscard]] char peek() const { return _text[ _pos ]; }
    [[nodiscard]] std::pair<std::size_t, std::size_t> here() const { return { _line, _col }; }

    void advance()
    {
        if ( _text[ _pos ] == '\n' )
        {
            ++_line;
            _col = 1;
        }
        else
            ++_col;
        ++_pos;
    }

    std::string_view _text;
    std::size_t _pos = 0;
    std::size_t _line = 1;
    std::size_t _col = 1;

    Flavor _flavor = Flavor::IA;
    std::string _name;
    Alphabet _alphabet;
    std::optional<StateName> _initial;
    std::vector<StateName> _order;
    std::set<std::string> _seen;
    std::vector<Trans> _trans;
    std::vector<SourceSpan> _spans;
    std::vector<std::tuple<std::string, char, std::size_t, std::size_t>> _decorations;
};

void join( std::ostream& out, const std::set<std::string, std::less<>>& items )
{
    if ( items.empty() )
        out << " ";
    bool first = true;
    for ( const auto& s : items )
    {
        out << ( first ? " " : ", " ) << s;
        first = false;
    }
}

} // namespace

SourceDocument parse_document( std::string_view text )
{
    return Parser( text ).run();
}

ModalAutomaton parse( std::string_view text )
{
    return parse_document( text ).automaton;
}

std::string serialize( const ModalAutomaton& a )
{
    std::ostringstream out;
    const Alphabet& alphabet = a.alphabet();
    const Flavor flavor = a.flavor();
    out << to_string( flavor ) << " " << a.name() << " {\n";
    if ( flavor == Flavor::DMTS )
    {
        out << "  actions:";
        join( out, alphabet.actions() );
        out << ";\n";
    }
    else
    {
        out << "  inputs:";
        join( out, alphabet.inputs );
        out << ";\n  outputs:";
        join( out, alphabet.outputs );
        out << ";\n";
    }

    std::vector<bool> used( a.size(), false );
    used[ a.initial() ] = true;
    for ( const auto& t : a.mays() )
        used[ t.source ] = used[ t.target ] = true;
    for ( const auto& t : a.musts() )
    {
        used[ t.source ] = true;
        for ( StateIndex x : t.targets )
            used[ x ] = true;
    }
    std::vector<std::string> isolated;
    for ( StateIndex s = 0; s < a.size(); ++s )
        if ( !used[ s ] )
            isolated.push_back( a.state( s ).str() );
    if ( !isolated.empty() )
    {
        out << "  states:";
        for ( std::size_t k = 0; k < isolated.size(); ++k )
            out << ( k ? ", " : " " ) << isolated[ k ];
        out << ";\n";
    }
    out << "  initial " << a.state( a.initial() ).str() << ";\n";

    auto name = [ &a ]( StateIndex s ) -> const std::string& { return a.state( s ).str(); };
    const bool io = flavor != Flavor::DMTS;

    if ( flavor == Flavor::IA )
    {
        // Input musts whose target set is a singleton with its may become a
        // bare line; so do output and tau mays.
        std::set<std::tuple<StateIndex, std::string, StateIndex>> bare_musts;
        for ( const auto& t : a.musts() )
            if ( alphabet.is_input( t.label ) && t.targets.size() == 1 &&
                 a.has_may( t.source, t.label, t.targets.front() ) )
                bare_musts.emplace( t.source, t.label, t.targets.front() );
        for ( const auto& t : a.musts() )
            if ( !( t.targets.size() == 1 && bare_musts.contains( { t.source, t.label, t.targets.front() } ) ) )
            {
                out << "  must " << name( t.source ) << " -" << t.label << "-> ";
                out << name( t.targets.front() ) << ";\n";
            }
        for ( const auto& t : a.mays() )
        {
            const bool input = alphabet.is_input( t.label );
            if ( !input || bare_musts.contains( { t.source, t.label, t.target } ) )
                out << "  " << name( t.source ) << " -" << t.label << "-> " << name( t.target ) << ";\n";
            else
                out << "  may " << name( t.source ) << " -" << t.label << "-> " << name( t.target ) << ";\n";
        }
        out << "}\n";
        return out.str();
    }

    std::set<std::tuple<StateIndex, std::string, StateIndex>> implied;
    for ( const auto& t : a.musts() )
    {
        out << "  must " << name( t.source ) << " -" << t.label << "-> ";
        if ( t.targets.size() == 1 )
            out << name( t.targets.front() );
        else
        {
            out << "{";
            for ( std::size_t k = 0; k < t.targets.size(); ++k )
                out << ( k ? "," : "" ) << name( t.targets[ k ] );
            out << "}";
        }
        out << ";\n";
        if ( io && alphabet.is_input( t.label ) )
            for ( StateIndex x : t.targets )
                implied.emplace( t.source, t.label, x );
    }
    for ( const auto& t : a.mays() )
        if ( !implied.contains( { t.source, t.label, t.target } ) )
            out << "  may " << name( t.source ) << " -" << t.label << "-> " << name( t.target ) << ";\n";
    out << "}\n";
    return out.str();
}

std::optional<SourceSpan> locate( const SourceDocument& doc, const Violation& v )
{
    const ModalAutomaton& a = doc.automaton;
    for ( const auto& span : doc.spans )
    {
        if ( !span.source )
            continue;
        if ( v.state && !( *span.source == a.state( *v.state ) ) )
            continue;
        if ( v.label && span.label != v.label )
            continue;
        if ( !v.state && !v.label )
            continue;
        return span;
    }
    return std::nullopt;
}

ModalAutomaton read_file( const std::string& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw Error( "cannot open " + path );
    std::ostringstream text;
    text << in.rdbuf();
    return parse( text.str() );
}

void write_file( const std::string& path, const ModalAutomaton& automaton )
{
    std::ofstream out( path, std::ios::binary );
    if ( !out )
        throw Error( "cannot write " + path );
    out << serialize( automaton );
}

} // namespace modint
