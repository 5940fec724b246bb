#pragma once

#include "modint/automaton.hpp"
#include "modint/parallel.hpp"

namespace modint
{

/// States {p&q} ∪ P ∪ Q. Inputs escape into a component when only one side
/// offers them; outputs need both sides; tau interleaves.
[[nodiscard]] ModalAutomaton ia_conjoin( const ModalAutomaton& p, const ModalAutomaton& q );

/// States {p|q} ∪ P ∪ Q. Common inputs stay in the vee-states; outputs and
/// tau commit to one component.
[[nodiscard]] ModalAutomaton ia_disjoin( const ModalAutomaton& p, const ModalAutomaton& q );

[[nodiscard]] ParallelProduct ia_parallel_product( const ModalAutomaton& p1, const ModalAutomaton& p2,
                                                   ParallelOptions options = {} );

[[nodiscard]] IncompatibilitySet ia_incompatible( const ParallelProduct& product, const ModalAutomaton& p1,
                                                  const ModalAutomaton& p2 );

[[nodiscard]] CompositionResult ia_parallel_compose( const ModalAutomaton& p1, const ModalAutomaton& p2,
                                                     ParallelOptions options = {} );

} // namespace modint
