#include "modint/refinement.hpp"

#include "modint/errors.hpp"
#include "modint/weak_closure.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <set>

namespace modint
{

namespace
{

constexpr std::size_t never = std::numeric_limits<std::size_t>::max();

Flavor flavor_of( RefinementKind kind )
{
    switch ( kind )
    {
    case RefinementKind::IA:
        return Flavor::IA;
    case RefinementKind::DMTS:
        return Flavor::DMTS;
    case RefinementKind::MIA:
        return Flavor::MIA;
    }
    return Flavor::MIA;
}

RefinementKind kind_of( Flavor flavor )
{
    switch ( flavor )
    {
    case Flavor::IA:
        return RefinementKind::IA;
    case Flavor::DMTS:
        return RefinementKind::DMTS;
    case Flavor::MIA:
        return RefinementKind::MIA;
    }
    return RefinementKind::MIA;
}

void check_alphabets( RefinementKind kind, const ModalAutomaton& impl, const ModalAutomaton& spec )
{
    if ( kind == RefinementKind::DMTS )
    {
        if ( impl.alphabet().actions() != spec.alphabet().actions() )
            throw AlphabetMismatch( "refinement requires equal action sets" );
        return;
    }
    if ( impl.alphabet() != spec.alphabet() )
        throw AlphabetMismatch( "refinement requires common input and output alphabets" );
}

/// One refinement step outcome for a pair under a given relation.
struct Verdict
{
    bool ok = true;
    std::string clause;
    std::string label;
    StateIndex source = 0;
    std::vector<StateIndex> targets;
    /// A pair outside the relation whose presence would have satisfied the
    /// clause, if any.
    std::optional<StatePair> blocker;
};

class Checker
{
public:
    Checker( RefinementKind kind, const ModalAutomaton& impl, const ModalAutomaton& spec )
            : _kind( kind ), _impl( impl ), _spec( spec ), _spec_weak( spec )
    {}

    [[nodiscard]] bool needs_match( std::string_view label ) const
    {
        if ( _kind == RefinementKind::DMTS )
            return true;
        return !_impl.alphabet().is_input( label );
    }

    /// `in` tells membership; `rank` orders candidate blockers (higher is
    /// preferred) and may be null.
    Verdict check( StatePair pq, const std::function<bool( StatePair )>& in,
                   const std::function<std::size_t( StatePair )>& rank ) const
    {
        const StateIndex p = pq.impl;
        const StateIndex q = pq.spec;
        Verdict v;

        auto consider = [ & ]( StatePair cand ) {
            if ( !rank )
            {
                if ( !v.blocker )
                    v.blocker = cand;
                return;
            }
            if ( !v.blocker || rank( cand ) > rank( *v.blocker ) )
                v.blocker = cand;
        };

        // (i) every spec must is matched by some impl must.
        for ( const auto& [ label, spec_sets ] : _spec.must_out( q ) )
        {
            for ( const auto& spec_targets : spec_sets )
            {
                bool matched = false;
                std::optional<StatePair> first_block;
                for ( const auto& impl_targets : _impl.must_targets( p, label ) )
                {
                    bool all = true;
                    for ( StateIndex pt : impl_targets )
                    {
                        bool any = false;
                        for ( StateIndex qt : spec_targets )
                            if ( in( { pt, qt } ) )
                            {
                                any = true;
                                break;
                            }
                        if ( !any )
                        {
                            all = false;
                            if ( !first_block )
                                for ( StateIndex qt : spec_targets )
                                    if ( !first_block || ( rank && rank( { pt, qt } ) > rank( *first_block ) ) )
                                        first_block = StatePair{ pt, qt };
                            break;
                        }
                    }
                    if ( all )
                    {
                        matched = true;
                        break;
                    }
                }
                if ( !matched )
                {
                    v.ok = false;
                    v.clause = "(i)";
                    v.label = label;
                    v.source = q;
                    v.targets = spec_targets;
                    if ( first_block )
                        consider( *first_block );
                    return v;
                }
            }
        }

        // (ii) every relevant impl may is matched weakly by the specification.
        for ( const auto& [ label, impl_targets ] : _impl.may_out( p ) )
        {
            if ( !needs_match( label ) )
                continue;
            const auto& answers = _spec_weak.hat( q, label );
            for ( StateIndex pt : impl_targets )
            {
                bool any = false;
                for ( StateIndex qt : answers )
                    if ( in( { pt, qt } ) )
                    {
                        any = true;
                        break;
                    }
                if ( !any )
                {
                    v.ok = false;
                    v.clause = "(ii)";
                    v.label = label;
                    v.source = p;
                    v.targets = { pt };
                    for ( StateIndex qt : answers )
                        consider( { pt, qt } );
                    return v;
                }
            }
        }
        return v;
    }

    /// Impl states with a transition into `p`.
    [[nodiscard]] std::vector<std::vector<StateIndex>> impl_predecessors() const
    {
        std::vector<std::set<StateIndex>> pre( _impl.size() );
        for ( const auto& t : _impl.mays() )
            pre[ t.target ].insert( t.source );
        for ( const auto& t : _impl.musts() )
            for ( StateIndex x : t.targets )
                pre[ x ].insert( t.source );
        return flatten( pre );
    }

    /// Spec states from which `q` is reached by a weak answer or a must.
    [[nodiscard]] std::vector<std::vector<StateIndex>> spec_predecessors() const
    {
        std::vector<std::set<StateIndex>> pre( _spec.size() );
        for ( StateIndex q = 0; q < _spec.size(); ++q )
        {
            for ( StateIndex x : _spec_weak.eps( q ) )
                pre[ x ].insert( q );
            for ( const auto& label : _spec_weak.labels() )
                for ( StateIndex x : _spec_weak.weak( q, label ) )
                    pre[ x ].insert( q );
        }
        for ( const auto& t : _spec.musts() )
            for ( StateIndex x : t.targets )
                pre[ x ].insert( t.source );
        return flatten( pre );
    }

private:
    static std::vector<std::vector<StateIndex>> flatten( const std::vector<std::set<StateIndex>>& sets )
    {
        std::vector<std::vector<StateIndex>> out;
        out.reserve( sets.size() );
        for ( const auto& s : sets )
            out.emplace_back( s.begin(), s.end() );
        return out;
    }

    RefinementKind _kind;
    const ModalAutomaton& _impl;
    const ModalAutomaton& _spec;
    WeakClosure _spec_weak;
};

RefinementWitness decide( RefinementKind kind, const ModalAutomaton& impl, const ModalAutomaton& spec,
                          StateIndex impl_state, StateIndex spec_state, RefinementOptions options )
{
    const Flavor flavor = flavor_of( kind );
    if ( impl.flavor() != flavor || spec.flavor() != flavor )
        throw FlavorMismatch( std::string( "expected two " ) + std::string( to_string( flavor ) ) +
                              " automata, got " + std::string( to_string( impl.flavor() ) ) + " and " +
                              std::string( to_string( spec.flavor() ) ) );
    if ( options.require_valid )
    {
        require_valid( impl, flavor, "implementation" );
        require_valid( spec, flavor, "specification" );
    }
    check_alphabets( kind, impl, spec );
    if ( impl_state >= impl.size() || spec_state >= spec.size() )
        throw std::out_of_range( "refinement query names a state outside the automaton" );

    const std::size_t ni = impl.size();
    const std::size_t ns = spec.size();
    auto idx = [ ns ]( StatePair pq ) { return static_cast<std::size_t>( pq.impl ) * ns + pq.spec; };

    Checker checker( kind, impl, spec );
    std::vector<char> related( ni * ns, 1 );
    std::vector<std::size_t> removed_at( ni * ns, never );
    std::vector<Verdict> reason( ni * ns );
    std::vector<char> queued( ni * ns, 1 );

    auto in = [ & ]( StatePair pq ) { return related[ idx( pq ) ] != 0; };
    auto rank = [ & ]( StatePair pq ) { return removed_at[ idx( pq ) ]; };

    const auto impl_pre = checker.impl_predecessors();
    const auto spec_pre = checker.spec_predecessors();

    std::deque<StatePair> work;
    for ( StateIndex p = 0; p < ni; ++p )
        for ( StateIndex q = 0; q < ns; ++q )
            work.push_back( { p, q } );

    std::size_t clock = 0;
    while ( !work.empty() )
    {
        StatePair pq = work.front();
        work.pop_front();
        queued[ idx( pq ) ] = 0;
        if ( !in( pq ) )
            continue;
        Verdict v = checker.check( pq, in, rank );
        if ( v.ok )
            continue;
        related[ idx( pq ) ] = 0;
        removed_at[ idx( pq ) ] = clock++;
        reason[ idx( pq ) ] = std::move( v );
        for ( StateIndex p0 : impl_pre[ pq.impl ] )
            for ( StateIndex q0 : spec_pre[ pq.spec ] )
            {
                StatePair dep{ p0, q0 };
                if ( in( dep ) && !queued[ idx( dep ) ] )
                {
                    queued[ idx( dep ) ] = 1;
                    work.push_back( dep );
                }
            }
    }

    RefinementWitness w;
    w.kind = kind;
    for ( StateIndex p = 0; p < ni; ++p )
        for ( StateIndex q = 0; q < ns; ++q )
            if ( in( { p, q } ) )
                w.pairs.push_back( { p, q } );

    StatePair root{ impl_state, spec_state };
    w.holds = in( root );
    if ( !w.holds )
    {
        RefinementFailure f;
        StatePair cur = root;
        f.chain.push_back( cur );
        // Blockers were removed strictly earlier, so this terminates.
        while ( true )
        {
            const Verdict& v = reason[ idx( cur ) ];
            if ( !v.blocker || in( *v.blocker ) || removed_at[ idx( *v.blocker ) ] >= removed_at[ idx( cur ) ] )
                break;
            cur = *v.blocker;
            f.chain.push_back( cur );
        }
        const Verdict& v = reason[ idx( cur ) ];
        f.pair = cur;
        f.clause = v.clause;
        f.label = v.label;
        f.transition_source = v.source;
        f.transition_targets = v.targets;
        w.failure = std::move( f );
    }
    return w;
}

} // namespace

bool RefinementWitness::contains( StatePair p ) const
{
    return std::binary_search( pairs.begin(), pairs.end(), p );
}

RefinementWitness ia_refines( const ModalAutomaton& impl, const ModalAutomaton& spec )
{
    return ia_refines( impl, spec, impl.initial(), spec.initial() );
}

RefinementWitness ia_refines( const ModalAutomaton& impl, const ModalAutomaton& spec, StateIndex impl_state,
                              StateIndex spec_state, RefinementOptions options )
{
    return decide( RefinementKind::IA, impl, spec, impl_state, spec_state, options );
}

RefinementWitness dmts_refines( const ModalAutomaton& impl, const ModalAutomaton& spec )
{
    return dmts_refines( impl, spec, impl.initial(), spec.initial() );
}

RefinementWitness dmts_refines( const ModalAutomaton& impl, const ModalAutomaton& spec, StateIndex impl_state,
                                StateIndex spec_state, RefinementOptions options )
{
    return decide( RefinementKind::DMTS, impl, spec, impl_state, spec_state, options );
}

RefinementWitness mia_refines( const ModalAutomaton& impl, const ModalAutomaton& spec )
{
    return mia_refines( impl, spec, impl.initial(), spec.initial() );
}

RefinementWitness mia_refines( const ModalAutomaton& impl, const ModalAutomaton& spec, StateIndex impl_state,
                               StateIndex spec_state, RefinementOptions options )
{
    return decide( RefinementKind::MIA, impl, spec, impl_state, spec_state, options );
}

bool mia_equiv( const ModalAutomaton& a, const ModalAutomaton& b )
{
    return mia_equiv( a, b, a.initial(), b.initial() );
}

bool mia_equiv( const ModalAutomaton& a, const ModalAutomaton& b, StateIndex a_state, StateIndex b_state )
{
    return mia_refines( a, b, a_state, b_state ).holds && mia_refines( b, a, b_state, a_state ).holds;
}

RefinementWitness refines( const ModalAutomaton& impl, const ModalAutomaton& spec )
{
    return refines( impl, spec, impl.initial(), spec.initial() );
}

RefinementWitness refines( const ModalAutomaton& impl, const ModalAutomaton& spec, StateIndex impl_state,
                           StateIndex spec_state, RefinementOptions options )
{
    if ( impl.flavor() != spec.flavor() )
        throw FlavorMismatch( "cannot relate a " + std::string( to_string( impl.flavor() ) ) + " automaton to a " +
                              std::string( to_string( spec.flavor() ) ) + " automaton" );
    return decide( kind_of( impl.flavor() ), impl, spec, impl_state, spec_state, options );
}

bool equivalent( const ModalAutomaton& a, const ModalAutomaton& b )
{
    return refines( a, b ).holds && refines( b, a ).holds;
}

bool is_refinement_relation( RefinementKind kind, const ModalAutomaton& impl, const ModalAutomaton& spec,
                             const std::vector<StatePair>& pairs )
{
    std::set<StatePair> members( pairs.begin(), pairs.end() );
    for ( const auto& pq : members )
        if ( pq.impl >= impl.size() || pq.spec >= spec.size() )
            return false;
    Checker checker( kind, impl, spec );
    auto in = [ & ]( StatePair pq ) { return members.contains( pq ); };
    for ( const auto& pq : members )
        if ( !checker.check( pq, in, nullptr ).ok )
            return false;
    return true;
}

} // namespace modint
