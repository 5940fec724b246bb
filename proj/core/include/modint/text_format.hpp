#pragma once

#include "modint/automaton.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace modint
{

/// Position of one declaration in the source text (1-based).
struct SourceSpan
{
    std::size_t line = 0;
    std::size_t column = 0;
    /// "alphabet", "states", "initial", "may", "must" or "transition".
    std::string kind;
    std::optional<StateName> source;
    std::optional<std::string> label;
};

struct SourceDocument
{
    std::string text;
    ModalAutomaton automaton;
    std::vector<SourceSpan> spans;
};

/// Parses the textual format
///
///   mia Name {
///     inputs: i;            # ia, mia
///     outputs: o;           # ia, mia
///     actions: a, b;        # dmts
///     states: s1, s2;       # optional, for states without transitions
///     initial s;
///     must s -i-> {s1,s2};  # input musts imply their mays in ia/mia
///     may s1 -o-> s2;
///     s -i-> s1;            # ia only: input = must + may, otherwise may
///   }
///
/// Labels may carry a "?" (input) or "!" (output) suffix. Syntax errors
/// throw ParseError; flavor invariants are left to validate().
[[nodiscard]] SourceDocument parse_document( std::string_view text );
[[nodiscard]] ModalAutomaton parse( std::string_view text );

/// Canonical rendering: alphabet, then isolated states, the initial state,
/// musts and finally the mays not implied by a must, each sorted.
[[nodiscard]] std::string serialize( const ModalAutomaton& automaton );

/// Source position of the first declaration that introduces the
/// transition a violation talks about.
[[nodiscard]] std::optional<SourceSpan> locate( const SourceDocument& doc, const Violation& violation );

[[nodiscard]] ModalAutomaton read_file( const std::string& path );
void write_file( const std::string& path, const ModalAutomaton& automaton );

} // namespace modint
