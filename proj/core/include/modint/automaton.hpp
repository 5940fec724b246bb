#pragma once

#include "modint/state_name.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace modint
{

/// The reserved silent action.
inline constexpr std::string_view tau = "tau";

[[nodiscard]] inline bool is_tau( std::string_view label ) { return label == tau; }

enum class Flavor
{
    IA,
    DMTS,
    MIA,
};

[[nodiscard]] std::string_view to_string( Flavor flavor );

/// Input and output action sets. A dMTS keeps its whole action set in
/// `outputs` and leaves `inputs` empty.
struct Alphabet
{
    std::set<std::string, std::less<>> inputs;
    std::set<std::string, std::less<>> outputs;

    [[nodiscard]] bool is_input( std::string_view a ) const { return inputs.contains( a ); }
    [[nodiscard]] bool is_output( std::string_view a ) const { return outputs.contains( a ); }
    [[nodiscard]] bool contains( std::string_view a ) const { return is_input( a ) || is_output( a ); }
    /// inputs ∪ outputs
    [[nodiscard]] std::set<std::string, std::less<>> actions() const;

    friend bool operator==( const Alphabet&, const Alphabet& ) = default;
};

using StateIndex = std::uint32_t;

struct MayTransition
{
    StateIndex source;
    std::string label;
    StateIndex target;

    friend auto operator<=>( const MayTransition&, const MayTransition& ) = default;
};

struct MustTransition
{
    StateIndex source;
    std::string label;
    std::vector<StateIndex> targets; // sorted, duplicate-free

    friend auto operator<=>( const MustTransition&, const MustTransition& ) = default;
};

/// Finite automaton shared by all three theories.
///
/// States are stored in lexicographic order of their canonical names, so a
/// StateIndex comparison agrees with a name comparison and all iteration
/// is deterministic. Instances are immutable; build them through
/// AutomatonBuilder.
class ModalAutomaton
{
public:
    using LabelTargets = std::map<std::string, std::vector<StateIndex>, std::less<>>;
    using LabelMusts = std::map<std::string, std::vector<std::vector<StateIndex>>, std::less<>>;

    [[nodiscard]] Flavor flavor() const { return _flavor; }
    [[nodiscard]] const std::string& name() const { return _name; }
    [[nodiscard]] const Alphabet& alphabet() const { return _alphabet; }

    [[nodiscard]] std::size_t size() const { return _states.size(); }
    [[nodiscard]] const StateName& state( StateIndex s ) const { return _states.at( s ); }
    [[nodiscard]] const std::vector<StateName>& states() const { return _states; }
    [[nodiscard]] std::optional<StateIndex> find( const StateName& name ) const;
    [[nodiscard]] std::optional<StateIndex> find( std::string_view canonical ) const;
    /// Like find, but throws std::out_of_range for unknown names.
    [[nodiscard]] StateIndex index_of( std::string_view canonical ) const;

    [[nodiscard]] StateIndex initial() const { return _initial; }

    [[nodiscard]] const std::vector<MayTransition>& mays() const { return _mays; }
    [[nodiscard]] const std::vector<MustTransition>& musts() const { return _musts; }

    /// Outgoing may-transitions of `s`, grouped by label.
    [[nodiscard]] const LabelTargets& may_out( StateIndex s ) const { return _may_out.at( s ); }
    /// Outgoing must-transitions of `s`, grouped by label.
    [[nodiscard]] const LabelMusts& must_out( StateIndex s ) const { return _must_out.at( s ); }

    [[nodiscard]] std::span<const StateIndex> may_targets( StateIndex s, std::string_view label ) const;
    [[nodiscard]] std::span<const std::vector<StateIndex>> must_targets( StateIndex s, std::string_view label ) const;
    [[nodiscard]] bool has_may( StateIndex s, std::string_view label ) const { return !may_targets( s, label ).empty(); }
    [[nodiscard]] bool has_must( StateIndex s, std::string_view label ) const
    {
        return !must_targets( s, label ).empty();
    }
    [[nodiscard]] bool has_may( StateIndex s, std::string_view label, StateIndex t ) const;

    /// Every label occurring on some transition, sorted.
    [[nodiscard]] std::vector<std::string> labels() const;

private:
    friend class AutomatonBuilder;

    Flavor _flavor = Flavor::IA;
    std::string _name;
    Alphabet _alphabet;
    std::vector<StateName> _states;
    std::map<std::string, StateIndex, std::less<>> _index;
    StateIndex _initial = 0;
    std::vector<MayTransition> _mays;
    std::vector<MustTransition> _musts;
    std::vector<LabelTargets> _may_out;
    std::vector<LabelMusts> _must_out;
};

/// Mutable staging area for a ModalAutomaton. State handles returned by
/// add_state are only meaningful for this builder; build() renumbers
/// states into canonical order.
class AutomatonBuilder
{
public:
    using Handle = std::size_t;

    AutomatonBuilder( Flavor flavor, std::string name, Alphabet alphabet );
    /// Starts from a copy of an existing automaton.
    explicit AutomatonBuilder( const ModalAutomaton& automaton );

    Handle add_state( const StateName& name );
    [[nodiscard]] std::optional<Handle> find( const StateName& name ) const;
    [[nodiscard]] const StateName& state( Handle h ) const { return _names.at( h ); }
    [[nodiscard]] std::size_t state_count() const { return _names.size(); }

    void set_initial( Handle h ) { _initial = h; }
    [[nodiscard]] std::optional<Handle> initial() const { return _initial; }

    void add_may( Handle source, std::string label, Handle target );
    void add_must( Handle source, std::string label, std::vector<Handle> targets );
    /// IA convention: inputs become a singleton must plus its may, every
    /// other label a plain may.
    void add_ia( Handle source, const std::string& label, Handle target );

    void set_flavor( Flavor flavor ) { _flavor = flavor; }
    void set_name( std::string name ) { _name = std::move( name ); }
    void set_alphabet( Alphabet alphabet ) { _alphabet = std::move( alphabet ); }
    [[nodiscard]] Flavor flavor() const { return _flavor; }
    [[nodiscard]] const Alphabet& alphabet() const { return _alphabet; }

    using MayKey = std::tuple<Handle, std::string, Handle>;
    using MustKey = std::tuple<Handle, std::string, std::vector<Handle>>;

    /// Direct access for transformations (shrinking, repair).
    std::set<MayKey>& mays() { return _mays; }
    std::set<MustKey>& musts() { return _musts; }

    /// Drops a state and every transition touching it; must targets lose
    /// the state and musts left without targets disappear. The initial
    /// state cannot be removed.
    void remove_state( Handle h );
    void remove_states( const std::vector<Handle>& hs );

    /// Throws std::logic_error if no initial state was set.
    [[nodiscard]] ModalAutomaton build() const;

private:
    Flavor _flavor;
    std::string _name;
    Alphabet _alphabet;
    std::vector<StateName> _names;
    std::vector<bool> _removed;
    std::map<StateName, Handle> _lookup;
    std::optional<Handle> _initial;
    std::set<MayKey> _mays;
    std::set<MustKey> _musts;
};

struct Violation
{
    std::string rule;
    std::string message;
    std::optional<StateIndex> state;
    std::optional<std::string> label;
};

/// Checks the flavor invariants; an empty result means the automaton is a
/// well-formed IA, dMTS or MIA.
[[nodiscard]] std::vector<Violation> validate( const ModalAutomaton& automaton );

/// Throws FlavorMismatch if the flavor differs and InvalidAutomaton if
/// validate reports anything.
void require_valid( const ModalAutomaton& automaton, Flavor expected, std::string_view role );

/// Returns the pair unchanged when the state sets are already disjoint;
/// otherwise every state of `a` is tagged @L and every state of `b` @R.
[[nodiscard]] std::pair<ModalAutomaton, ModalAutomaton> rename_disjoint( const ModalAutomaton& a,
                                                                         const ModalAutomaton& b );

/// Same transitions read as a dMTS over inputs ∪ outputs.
[[nodiscard]] ModalAutomaton underlying_dmts( const ModalAutomaton& automaton );

/// Restricts to states reachable from the initial state via may- or
/// must-transitions.
[[nodiscard]] ModalAutomaton trim_unreachable( const ModalAutomaton& automaton );

/// Copy with a different name (states unchanged).
[[nodiscard]] ModalAutomaton renamed( const ModalAutomaton& automaton, std::string name );

/// Copy with a different initial state.
[[nodiscard]] ModalAutomaton with_initial( const ModalAutomaton& automaton, StateIndex initial );

} // namespace modint
