#pragma once

#include "modint/automaton.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace modint
{

/// Which rule put a product state into the inconsistency set.
struct InconsistencyCause
{
    /// "F1", "F2" or "F3".
    std::string rule;
    std::string label;
    /// For F3: the must-transition whose targets all became inconsistent.
    std::vector<StateIndex> must_targets;
};

/// Conjunctive product of two dMTS or two MIA, before pruning.
struct ConjunctiveProduct
{
    ModalAutomaton automaton;
    /// Per product state: true for (p,q) pairs, false for inherited
    /// component states (MIA only).
    std::vector<bool> paired;
    /// Per product state: component indices of a pair in the (renamed)
    /// operands.
    std::vector<std::optional<std::pair<StateIndex, StateIndex>>> origin;
    /// Pairs where one side requires an action the other can never
    /// perform weakly (seeds of F).
    std::map<StateIndex, InconsistencyCause> local_conflicts;
};

/// Least fixpoint F of the inconsistency rules.
struct InconsistencySet
{
    std::vector<StateIndex> members; // sorted
    std::map<StateIndex, InconsistencyCause> provenance;

    [[nodiscard]] bool contains( StateIndex s ) const;
    [[nodiscard]] bool empty() const { return members.empty(); }
};

struct ConjunctionResult
{
    ConjunctiveProduct product;
    InconsistencySet inconsistent_states;
    /// Empty when the initial pair is inconsistent: the conjunction is
    /// undefined.
    std::optional<ModalAutomaton> automaton;

    [[nodiscard]] bool defined() const { return automaton.has_value(); }
};

/// F over any conjunctive product; shared by the dMTS and MIA operators.
[[nodiscard]] InconsistencySet inconsistency_set( const ConjunctiveProduct& product );

/// Deletes F from the product: outgoing transitions, incoming mays and
/// must-target entries of deleted states disappear. Returns nullopt when
/// the initial state is deleted.
[[nodiscard]] std::optional<ModalAutomaton> delete_inconsistent( const ConjunctiveProduct& product,
                                                                 const InconsistencySet& f );

/// Witness conditions over a conjunctive product. Members that are
/// inherited component states are not constrained.
[[nodiscard]] bool is_witness( const ConjunctiveProduct& product, const std::vector<StateIndex>& w );

} // namespace modint
