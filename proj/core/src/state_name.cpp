#include "modint/state_name.hpp"

#include <cctype>
#include <stdexcept>

namespace modint
{

bool is_ident_char( char c )
{
    return std::isalnum( static_cast<unsigned char>( c ) ) || c == '_' || c == '\'' || c == '.';
}

StateName::StateName() : _text( "_" ), _canonical( "_" ) {}

StateName::StateName( Kind kind, std::string text, std::shared_ptr<const StateName> left,
                      std::shared_ptr<const StateName> right, Side side )
        : _kind( kind ), _text( std::move( text ) ), _left( std::move( left ) ), _right( std::move( right ) ),
          _side( side )
{
    render();
}

StateName StateName::atom( std::string text )
{
    if ( text.empty() )
        throw std::invalid_argument( "empty state name" );
    for ( char c : text )
        if ( !is_ident_char( c ) )
            throw std::invalid_argument( "invalid character in state name '" + text + "'" );
    return StateName( Kind::Atom, std::move( text ), nullptr, nullptr, Side::Left );
}

StateName StateName::pair( StateName left, StateName right )
{
    return StateName( Kind::Pair, {}, std::make_shared<const StateName>( std::move( left ) ),
                      std::make_shared<const StateName>( std::move( right ) ), Side::Left );
}

StateName StateName::wedge( StateName left, StateName right )
{
    return StateName( Kind::Wedge, {}, std::make_shared<const StateName>( std::move( left ) ),
                      std::make_shared<const StateName>( std::move( right ) ), Side::Left );
}

StateName StateName::vee( StateName left, StateName right )
{
    return StateName( Kind::Vee, {}, std::make_shared<const StateName>( std::move( left ) ),
                      std::make_shared<const StateName>( std::move( right ) ), Side::Left );
}

StateName StateName::universal( std::string automaton )
{
    for ( char c : automaton )
        if ( !is_ident_char( c ) )
            throw std::invalid_argument( "invalid automaton name '" + automaton + "'" );
    return StateName( Kind::Universal, std::move( automaton ), nullptr, nullptr, Side::Left );
}

StateName StateName::tagged( StateName inner, Side side )
{
    return StateName( Kind::Tagged, {}, std::make_shared<const StateName>( std::move( inner ) ), nullptr, side );
}

const StateName& StateName::left() const
{
    if ( !_left )
        throw std::logic_error( "state name '" + _canonical + "' has no operands" );
    return *_left;
}

const StateName& StateName::right() const
{
    if ( !_right )
        throw std::logic_error( "state name '" + _canonical + "' has no right operand" );
    return *_right;
}

namespace
{

std::string operand( const StateName& n )
{
    if ( n.kind() == StateName::Kind::Wedge || n.kind() == StateName::Kind::Vee )
        return "(" + n.str() + ")";
    return n.str();
}

} // namespace

void StateName::render()
{
    switch ( _kind )
    {
    case Kind::Atom:
        _canonical = _text;
        break;
    case Kind::Pair:
        _canonical = "(" + _left->str() + "," + _right->str() + ")";
        break;
    case Kind::Wedge:
        _canonical = operand( *_left ) + "&" + operand( *_right );
        break;
    case Kind::Vee:
        _canonical = operand( *_left ) + "|" + operand( *_right );
        break;
    case Kind::Universal:
        _canonical = "univ[" + _text + "]";
        break;
    case Kind::Tagged:
        _canonical = operand( *_left ) + ( _side == Side::Left ? "@L" : "@R" );
        break;
    }
}

namespace
{

class NameParser
{
public:
    explicit NameParser( std::string_view text ) : _text( text ) {}

    StateName parse_all()
    {
        StateName n = name();
        if ( _pos != _text.size() )
            fail( "trailing characters" );
        return n;
    }

private:
    StateName name()
    {
        StateName lhs = unit();
        if ( peek() == '&' || peek() == '|' )
        {
            char op = _text[ _pos++ ];
            StateName rhs = unit();
            return op == '&' ? StateName::wedge( std::move( lhs ), std::move( rhs ) )
                             : StateName::vee( std::move( lhs ), std::move( rhs ) );
        }
        return lhs;
    }

    StateName unit()
    {
        StateName n = base();
        while ( peek() == '@' )
        {
            ++_pos;
            char side = peek();
            if ( side != 'L' && side != 'R' )
                fail( "expected L or R after '@'" );
            ++_pos;
            n = StateName::tagged( std::move( n ), side == 'L' ? Side::Left : Side::Right );
        }
        return n;
    }

    StateName base()
    {
        if ( peek() == '(' )
        {
            ++_pos;
            StateName first = name();
            if ( peek() == ',' )
            {
                ++_pos;
                StateName second = name();
                expect( ')' );
                return StateName::pair( std::move( first ), std::move( second ) );
            }
            expect( ')' );
            return first;
        }
        std::string ident = identifier();
        if ( ident == "univ" && peek() == '[' )
        {
            ++_pos;
            std::string automaton = identifier();
            expect( ']' );
            return StateName::universal( std::move( automaton ) );
        }
        return StateName::atom( std::move( ident ) );
    }

    std::string identifier()
    {
        std::size_t start = _pos;
        while ( _pos < _text.size() && is_ident_char( _text[ _pos ] ) )
            ++_pos;
        if ( start == _pos )
            fail( "expected identifier" );
        return std::string( _text.substr( start, _pos - start ) );
    }

    void expect( char c )
    {
        if ( peek() != c )
            fail( std::string( "expected '" ) + c + "'" );
        ++_pos;
    }

    [[nodiscard]] char peek() const { return _pos < _text.size() ? _text[ _pos ] : '\0'; }

    [[noreturn]] void fail( const std::string& what ) const
    {
        throw std::invalid_argument( "malformed state name '" + std::string( _text ) + "' at offset "
                                     + std::to_string( _pos ) + ": " + what );
    }

    std::string_view _text;
    std::size_t _pos = 0;
};

} // namespace

StateName StateName::parse( std::string_view text )
{
    return NameParser( text ).parse_all();
}

} // namespace modint
