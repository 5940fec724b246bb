#pragma once

#include "modint/automaton.hpp"

#include <optional>
#include <string>
#include <vector>

namespace modint
{

/// Which refinement preorder a witness belongs to.
///
///   IA    alternating simulation: spec inputs matched strongly,
///         impl outputs/tau matched weakly
///   DMTS  observational modal refinement: spec musts matched by impl
///         musts (for all / exists), every impl may matched weakly
///   MIA   like DMTS, but only impl output/tau mays need matching
enum class RefinementKind
{
    IA,
    DMTS,
    MIA,
};

struct StatePair
{
    StateIndex impl;
    StateIndex spec;

    friend auto operator<=>( const StatePair&, const StatePair& ) = default;
};

/// Why a pair left the relation.
struct RefinementFailure
{
    StatePair pair;
    /// "(i)": a spec must-transition has no matching impl must.
    /// "(ii)": an impl may-transition has no weak match in the specification.
    std::string clause;
    std::string label;
    /// Source state and targets of the offending transition; for (i) it
    /// lives in the specification, for (ii) in the impl.
    StateIndex transition_source = 0;
    std::vector<StateIndex> transition_targets;
    /// From the queried pair down to `pair`, following the pair whose
    /// earlier elimination caused the next one.
    std::vector<StatePair> chain;
};

struct RefinementWitness
{
    RefinementKind kind = RefinementKind::MIA;
    bool holds = false;
    /// The largest refinement relation between the two automata.
    std::vector<StatePair> pairs;
    /// Root cause, set when holds is false.
    std::optional<RefinementFailure> failure;

    [[nodiscard]] bool contains( StatePair p ) const;
};

struct RefinementOptions
{
    /// When false, the flavor invariants are not checked; the fixpoint runs
    /// on whatever transitions the automata carry.
    bool require_valid = true;
};

[[nodiscard]] RefinementWitness ia_refines( const ModalAutomaton& impl, const ModalAutomaton& spec );
[[nodiscard]] RefinementWitness ia_refines( const ModalAutomaton& impl, const ModalAutomaton& spec,
                                            StateIndex impl_state, StateIndex spec_state,
                                            RefinementOptions options = {} );

[[nodiscard]] RefinementWitness dmts_refines( const ModalAutomaton& impl, const ModalAutomaton& spec );
[[nodiscard]] RefinementWitness dmts_refines( const ModalAutomaton& impl, const ModalAutomaton& spec,
                                              StateIndex impl_state, StateIndex spec_state,
                                              RefinementOptions options = {} );

[[nodiscard]] RefinementWitness mia_refines( const ModalAutomaton& impl, const ModalAutomaton& spec );
[[nodiscard]] RefinementWitness mia_refines( const ModalAutomaton& impl, const ModalAutomaton& spec,
                                             StateIndex impl_state, StateIndex spec_state,
                                             RefinementOptions options = {} );

[[nodiscard]] bool mia_equiv( const ModalAutomaton& a, const ModalAutomaton& b );
[[nodiscard]] bool mia_equiv( const ModalAutomaton& a, const ModalAutomaton& b, StateIndex a_state,
                              StateIndex b_state );

/// Dispatches on the common flavor; throws FlavorMismatch for mixed flavors.
[[nodiscard]] RefinementWitness refines( const ModalAutomaton& impl, const ModalAutomaton& spec );
[[nodiscard]] RefinementWitness refines( const ModalAutomaton& impl, const ModalAutomaton& spec,
                                         StateIndex impl_state, StateIndex spec_state,
                                         RefinementOptions options = {} );

/// Refinement in both directions, for any single flavor.
[[nodiscard]] bool equivalent( const ModalAutomaton& a, const ModalAutomaton& b );

/// Rechecks every pair of a relation against the clauses of `kind`
/// without any fixpoint iteration. Used to audit returned witnesses.
[[nodiscard]] bool is_refinement_relation( RefinementKind kind, const ModalAutomaton& impl,
                                           const ModalAutomaton& spec, const std::vector<StatePair>& pairs );

} // namespace modint
