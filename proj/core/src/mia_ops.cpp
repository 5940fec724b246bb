#include "modint/mia_ops.hpp"

#include "op_support.hpp"

namespace modint
{

ConjunctiveProduct mia_conj_product( const ModalAutomaton& p, const ModalAutomaton& q )
{
    detail::require_same_alphabet( p, q, Flavor::MIA, "MIA conjunction" );
    return detail::conjunctive_product( p, q, true );
}

InconsistencySet mia_inconsistent( const ConjunctiveProduct& product )
{
    return inconsistency_set( product );
}

ConjunctionResult mia_conjoin( const ModalAutomaton& p, const ModalAutomaton& q )
{
    ConjunctionResult r{ mia_conj_product( p, q ), {}, std::nullopt };
    r.inconsistent_states = mia_inconsistent( r.product );
    r.automaton = delete_inconsistent( r.product, r.inconsistent_states );
    return r;
}

ModalAutomaton mia_disjoin( const ModalAutomaton& p, const ModalAutomaton& q )
{
    detail::require_same_alphabet( p, q, Flavor::MIA, "MIA disjunction" );
    return detail::disjunction( p, q, true );
}

bool is_mia_witness( const ConjunctiveProduct& product, const std::vector<StateIndex>& w )
{
    return is_witness( product, w );
}

ParallelProduct mia_parallel_product( const ModalAutomaton& p1, const ModalAutomaton& p2, ParallelOptions options )
{
    return detail::parallel_product( p1, p2, Flavor::MIA, options );
}

IncompatibilitySet mia_incompatible( const ParallelProduct& product, const ModalAutomaton& p1,
                                     const ModalAutomaton& p2 )
{
    return detail::incompatibility_set( product, p1, p2 );
}

CompositionResult mia_parallel_compose( const ModalAutomaton& p1, const ModalAutomaton& p2, ParallelOptions options )
{
    return detail::parallel_compose( p1, p2, Flavor::MIA, options );
}

} // namespace modint
