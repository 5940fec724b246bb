#pragma once

#include "modint/automaton.hpp"

#include <string>

namespace modint
{

/// Graphviz rendering. Musts are solid, may-only edges dashed, and a must
/// with several targets fans out from a point-shaped junction node. The
/// initial state gets a double border.
[[nodiscard]] std::string export_dot( const ModalAutomaton& automaton );

} // namespace modint
