#pragma once

#include "modint/automaton.hpp"
#include "modint/conjunction.hpp"
#include "modint/parallel.hpp"

#include <vector>

namespace modint
{

/// States (P×Q) ∪ P ∪ Q with the component transitions inherited. Outputs
/// and tau follow the dMTS product; inputs behave as in IA conjunction.
[[nodiscard]] ConjunctiveProduct mia_conj_product( const ModalAutomaton& p, const ModalAutomaton& q );

/// Like the dMTS set, but only outputs seed it; component states never
/// belong to it.
[[nodiscard]] InconsistencySet mia_inconsistent( const ConjunctiveProduct& product );

[[nodiscard]] ConjunctionResult mia_conjoin( const ModalAutomaton& p, const ModalAutomaton& q );

/// As for dMTS, except that an input may at a vee-state needs an input may
/// on both sides.
[[nodiscard]] ModalAutomaton mia_disjoin( const ModalAutomaton& p, const ModalAutomaton& q );

[[nodiscard]] bool is_mia_witness( const ConjunctiveProduct& product, const std::vector<StateIndex>& w );

[[nodiscard]] ParallelProduct mia_parallel_product( const ModalAutomaton& p1, const ModalAutomaton& p2,
                                                    ParallelOptions options = {} );

[[nodiscard]] IncompatibilitySet mia_incompatible( const ParallelProduct& product, const ModalAutomaton& p1,
                                                   const ModalAutomaton& p2 );

/// Pruning drops E, every transition touching E (a must is dropped whole
/// when any target is in E) and the mays underlying each dropped must.
[[nodiscard]] CompositionResult mia_parallel_compose( const ModalAutomaton& p1, const ModalAutomaton& p2,
                                                      ParallelOptions options = {} );

} // namespace modint
