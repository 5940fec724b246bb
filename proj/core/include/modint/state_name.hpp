#pragma once

#include <compare>
#include <memory>
#include <string>
#include <string_view>

namespace modint
{

/// Side tag used when two automata are renamed apart.
enum class Side
{
    Left,
    Right,
};

/// A state identifier that records how the state was constructed.
///
/// Operators build their states from the states of their arguments: a
/// parallel product state is a Pair, a conjunction state a Wedge, a
/// disjunction state a Vee. The canonical string is the only thing that
/// identifies a state; two names are equal iff their canonical strings are.
///
/// Rendering:
///   atom            p
///   pair            (p,q)
///   wedge           p&q
///   vee             p|q
///   universal       univ[P]
///   tagged          p@L, p@R
///
/// Wedge/vee operands that are themselves wedges or vees are parenthesized,
/// which keeps the rendering injective.
class StateName
{
public:
    enum class Kind
    {
        Atom,
        Pair,
        Wedge,
        Vee,
        Universal,
        Tagged,
    };

    StateName();

    static StateName atom( std::string text );
    static StateName pair( StateName left, StateName right );
    static StateName wedge( StateName left, StateName right );
    static StateName vee( StateName left, StateName right );
    static StateName universal( std::string automaton );
    static StateName tagged( StateName inner, Side side );

    /// Parses a canonical (or over-parenthesized) rendering.
    /// Throws std::invalid_argument on malformed input.
    static StateName parse( std::string_view text );

    [[nodiscard]] Kind kind() const { return _kind; }
    /// Atom text, or the automaton name of a universal state.
    [[nodiscard]] const std::string& text() const { return _text; }
    [[nodiscard]] const StateName& left() const;
    [[nodiscard]] const StateName& right() const;
    /// Inner name of a tagged state.
    [[nodiscard]] const StateName& inner() const { return left(); }
    [[nodiscard]] Side side() const { return _side; }

    [[nodiscard]] const std::string& str() const { return _canonical; }

    friend bool operator==( const StateName& a, const StateName& b ) { return a._canonical == b._canonical; }
    friend std::strong_ordering operator<=>( const StateName& a, const StateName& b )
    {
        return a._canonical.compare( b._canonical ) <=> 0;
    }

private:
    StateName( Kind kind, std::string text, std::shared_ptr<const StateName> left,
               std::shared_ptr<const StateName> right, Side side );

    void render();

    Kind _kind = Kind::Atom;
    std::string _text;
    std::shared_ptr<const StateName> _left;
    std::shared_ptr<const StateName> _right;
    Side _side = Side::Left;
    std::string _canonical;
};

/// True for characters allowed in atom names and action labels.
[[nodiscard]] bool is_ident_char( char c );

} // namespace modint
