#pragma once

#include <modint/automaton.hpp>

#include <functional>
#include <vector>

namespace testkit
{

/// True while the candidate still exhibits the failure.
using StillFails = std::function<bool( const std::vector<modint::ModalAutomaton>& )>;

/// Greedy minimization: repeatedly tries to delete one state or one
/// transition of one automaton, repairs validity, and keeps the edit when
/// the failure persists. Every returned automaton validates.
[[nodiscard]] std::vector<modint::ModalAutomaton> shrink( std::vector<modint::ModalAutomaton> inputs,
                                                          const StillFails& still_fails, int max_rounds = 200 );

} // namespace testkit
