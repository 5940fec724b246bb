#pragma once

#include "modint/automaton.hpp"
#include "modint/errors.hpp"

#include <string>
#include <string_view>

namespace modint::detail
{

/// Both operands valid for `flavor` with identical alphabets.
inline void require_same_alphabet( const ModalAutomaton& p, const ModalAutomaton& q, Flavor flavor,
                                   std::string_view op )
{
    if ( p.flavor() != flavor || q.flavor() != flavor )
        throw FlavorMismatch( std::string( op ) + " expects two " + std::string( to_string( flavor ) ) +
                              " operands, got " + std::string( to_string( p.flavor() ) ) + " and " +
                              std::string( to_string( q.flavor() ) ) );
    require_valid( p, flavor, "left operand" );
    require_valid( q, flavor, "right operand" );
    if ( flavor == Flavor::DMTS ? p.alphabet().actions() != q.alphabet().actions() : p.alphabet() != q.alphabet() )
        throw AlphabetMismatch( std::string( op ) + " requires common alphabets" );
}

inline std::string combined_name( const ModalAutomaton& p, std::string_view infix, const ModalAutomaton& q )
{
    return p.name() + "_" + std::string( infix ) + "_" + q.name();
}

} // namespace modint::detail

#include "modint/conjunction.hpp"

namespace modint::detail
{

/// Shared product construction. Labels in the outputs set follow the weak
/// dMTS rules; with `with_components`, inputs follow the strong MIA input
/// rules and the operands' states are inherited.
[[nodiscard]] ConjunctiveProduct conjunctive_product( const ModalAutomaton& p, const ModalAutomaton& q,
                                                      bool with_components );

/// Disjunction skeleton; with `guard_inputs`, an input may at a vee-state
/// needs a may for the same input on the other side.
[[nodiscard]] ModalAutomaton disjunction( const ModalAutomaton& p, const ModalAutomaton& q, bool guard_inputs );

} // namespace modint::detail

#include "modint/parallel.hpp"

namespace modint::detail
{

[[nodiscard]] ParallelProduct parallel_product( const ModalAutomaton& p1, const ModalAutomaton& p2, Flavor flavor,
                                                ParallelOptions options );
[[nodiscard]] IncompatibilitySet incompatibility_set( const ParallelProduct& product, const ModalAutomaton& p1,
                                                      const ModalAutomaton& p2 );
[[nodiscard]] CompositionResult parallel_compose( const ModalAutomaton& p1, const ModalAutomaton& p2,
                                                  Flavor flavor, ParallelOptions options );

} // namespace modint::detail
