#pragma once

#include "modint/automaton.hpp"

namespace modint
{

/// IA to dMTS over A = I ∪ O. Adds the universal state univ[<name>], which
/// may do every action forever; an input missing at a state becomes a may
/// into it. Input transitions keep their singleton musts.
[[nodiscard]] ModalAutomaton embed_ia_to_dmts( const ModalAutomaton& ia );

/// IA to MIA on the same states: input transitions are must and may, all
/// other transitions may only.
[[nodiscard]] ModalAutomaton embed_ia_to_mia( const ModalAutomaton& ia );

/// StateName of the universal state embed_ia_to_dmts adds to `ia`.
[[nodiscard]] StateName universal_state( const ModalAutomaton& ia );

} // namespace modint
