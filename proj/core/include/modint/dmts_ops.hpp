#pragma once

#include "modint/automaton.hpp"
#include "modint/conjunction.hpp"

#include <vector>

namespace modint
{

/// Product over P×Q only. Musts pair a strong must of one side with every
/// weak partner of the other; mays synchronize weak moves of both sides,
/// including two weak tau moves.
[[nodiscard]] ConjunctiveProduct dmts_conj_product( const ModalAutomaton& p, const ModalAutomaton& q );

[[nodiscard]] InconsistencySet dmts_inconsistent( const ConjunctiveProduct& product );

[[nodiscard]] ConjunctionResult dmts_conjoin( const ModalAutomaton& p, const ModalAutomaton& q );

/// States {p|q} ∪ P ∪ Q; the initial vee-state is {initial p}|{initial q}.
[[nodiscard]] ModalAutomaton dmts_disjoin( const ModalAutomaton& p, const ModalAutomaton& q );

[[nodiscard]] bool is_dmts_witness( const ConjunctiveProduct& product, const std::vector<StateIndex>& w );

} // namespace modint
