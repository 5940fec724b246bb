#include "modint/dmts_ops.hpp"

#include "op_support.hpp"

namespace modint
{

ConjunctiveProduct dmts_conj_product( const ModalAutomaton& p, const ModalAutomaton& q )
{
    detail::require_same_alphabet( p, q, Flavor::DMTS, "dMTS conjunction" );
    return detail::conjunctive_product( p, q, false );
}

InconsistencySet dmts_inconsistent( const ConjunctiveProduct& product )
{
    return inconsistency_set( product );
}

ConjunctionResult dmts_conjoin( const ModalAutomaton& p, const ModalAutomaton& q )
{
    ConjunctionResult r{ dmts_conj_product( p, q ), {}, std::nullopt };
    r.inconsistent_states = dmts_inconsistent( r.product );
    r.automaton = delete_inconsistent( r.product, r.inconsistent_states );
    return r;
}

ModalAutomaton dmts_disjoin( const ModalAutomaton& p, const ModalAutomaton& q )
{
    detail::require_same_alphabet( p, q, Flavor::DMTS, "dMTS disjunction" );
    return detail::disjunction( p, q, false );
}

bool is_dmts_witness( const ConjunctiveProduct& product, const std::vector<StateIndex>& w )
{
    return is_witness( product, w );
}

} // namespace modint
