#pragma once

#include "modint/automaton.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace modint
{

struct ParallelOptions
{
    /// When false, operands are only checked for flavor and composability;
    /// used to experiment with automata that break input-determinism.
    bool require_valid = true;
};

/// Product of two IA or two MIA; only pairs reachable from the initial
/// pair are materialized.
struct ParallelProduct
{
    ModalAutomaton automaton;
    /// Per product state: indices in the two operands.
    std::vector<std::pair<StateIndex, StateIndex>> origin;
    /// Shared actions A1 ∩ A2.
    std::vector<std::string> shared;
};

struct IncompatibilityCause
{
    /// "error-(a)", "error-(b)" or "autonomous-step".
    std::string rule;
    /// The shared action for errors, the output or tau for steps.
    std::string label;
    /// For autonomous steps: the incompatible successor.
    std::optional<StateIndex> successor;
};

/// Error states and their backward closure E over output and tau steps.
struct IncompatibilitySet
{
    std::vector<StateIndex> errors;       // sorted
    std::vector<StateIndex> incompatible; // sorted, superset of errors
    std::map<StateIndex, IncompatibilityCause> provenance;

    [[nodiscard]] bool contains( StateIndex s ) const;
    [[nodiscard]] bool empty() const { return incompatible.empty(); }
};

/// A transition of the product that pruning deleted, rendered with the
/// product's state names.
struct PrunedTransition
{
    /// "may" or "must".
    std::string kind;
    StateIndex source;
    std::string label;
    std::vector<StateIndex> targets;

    friend auto operator<=>( const PrunedTransition&, const PrunedTransition& ) = default;
};

struct CompositionResult
{
    ParallelProduct product;
    IncompatibilitySet incompatible_states;
    /// Transitions removed with or because of E, in product indices.
    std::vector<PrunedTransition> pruned;
    /// Empty when the initial pair is incompatible.
    std::optional<ModalAutomaton> automaton;

    [[nodiscard]] bool compatible() const { return automaton.has_value(); }
};

/// Throws NotComposable unless every shared action is an input of one
/// operand and an output of the other.
void check_composable( const ModalAutomaton& p1, const ModalAutomaton& p2 );

/// Product alphabet: inputs and outputs not consumed by synchronization.
[[nodiscard]] Alphabet product_alphabet( const Alphabet& a1, const Alphabet& a2 );

} // namespace modint
