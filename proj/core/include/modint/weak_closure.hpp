#pragma once

#include "modint/automaton.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace modint
{

/// Weak may-transitions of one automaton.
///
///   eps(q)        states reachable by zero or more tau-mays
///   weak(q, a)    { q' | q eps q'' and q'' -a-> q' }, no trailing tau
///   weak(q, tau)  eps followed by exactly one more tau-may (at least one step)
///   hat(q, a)     weak(q, a) for visible a, eps(q) for tau
class WeakClosure
{
public:
    explicit WeakClosure( const ModalAutomaton& automaton );

    [[nodiscard]] const std::vector<StateIndex>& eps( StateIndex q ) const { return _eps.at( q ); }
    [[nodiscard]] const std::vector<StateIndex>& weak( StateIndex q, std::string_view label ) const;
    [[nodiscard]] const std::vector<StateIndex>& hat( StateIndex q, std::string_view label ) const;
    [[nodiscard]] bool can( StateIndex q, std::string_view label ) const { return !weak( q, label ).empty(); }

    [[nodiscard]] std::size_t size() const { return _eps.size(); }
    /// Labels with a non-empty weak relation.
    [[nodiscard]] std::vector<std::string> labels() const;

    /// The relations as explicit pair sets.
    [[nodiscard]] std::vector<std::pair<StateIndex, StateIndex>> eps_pairs() const;
    [[nodiscard]] std::vector<std::pair<StateIndex, StateIndex>> weak_pairs( std::string_view label ) const;

private:
    std::vector<std::vector<StateIndex>> _eps;
    std::map<std::string, std::vector<std::vector<StateIndex>>, std::less<>> _weak;
};

[[nodiscard]] inline WeakClosure weak_closure( const ModalAutomaton& automaton ) { return WeakClosure( automaton ); }

} // namespace modint
