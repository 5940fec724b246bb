#include "testkit/oracle.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace testkit
{

using namespace modint;

namespace
{

/// Weak successors computed by plain path search, independent of the
/// library's closure.
class Paths
{
public:
    explicit Paths( const ModalAutomaton& a ) : _a( a ) {}

    /// States reachable by zero or more tau steps.
    std::set<StateIndex> silent( StateIndex q ) const
    {
        std::set<StateIndex> seen;
        dfs( q, seen );
        return seen;
    }

    /// hat = true: zero tau steps allowed for a tau label.
    std::set<StateIndex> after( StateIndex q, const std::string& label, bool hat ) const
    {
        const auto pre = silent( q );
        if ( is_tau( label ) && hat )
            return pre;
        std::set<StateIndex> out;
        for ( const auto& t : _a.mays() )
            if ( t.label == label && pre.contains( t.source ) )
                out.insert( t.target );
        return out;
    }

private:
    void dfs( StateIndex q, std::set<StateIndex>& seen ) const
    {
        if ( !seen.insert( q ).second )
            return;
        for ( const auto& t : _a.mays() )
            if ( t.source == q && is_tau( t.label ) )
                dfs( t.target, seen );
    }

    const ModalAutomaton& _a;
};

class Game
{
public:
    Game( Flavor flavor, const ModalAutomaton& impl, const ModalAutomaton& spec )
            : _flavor( flavor ), _impl( impl ), _spec( spec ), _spec_paths( spec )
    {
        for ( const auto* a : { &impl, &spec } )
            if ( a->size() > oracle_state_limit )
                throw OracleSizeLimit( "oracle is limited to " + std::to_string( oracle_state_limit ) +
                                       " states, got " + std::to_string( a->size() ) );
    }

    /// Plays rounds until one discovers no new loss; the pairs won in that
    /// round are then closed under the game.
    std::vector<bool> decide( const std::vector<std::pair<StateIndex, StateIndex>>& roots )
    {
        std::vector<bool> out( roots.size() );
        do
        {
            _new_loss = false;
            _won.clear();
            for ( std::size_t k = 0; k < roots.size(); ++k )
                out[ k ] = play( roots[ k ].first, roots[ k ].second );
        } while ( _new_loss );
        return out;
    }

private:
    using Key = std::pair<StateIndex, StateIndex>;

    // Losses hold for good: pairs still open count as won, which can only
    // help the implementation. Wins are valid for the current round only.
    bool play( StateIndex p, StateIndex q )
    {
        const Key key{ p, q };
        if ( _lost.contains( key ) )
            return false;
        if ( _won.contains( key ) || _open.contains( key ) )
            return true;

        _open.insert( key );
        auto sub = [ & ]( StateIndex x, StateIndex y ) { return play( x, y ); };
        const bool won = spec_demands_met( p, q, sub ) && impl_moves_answered( p, q, sub );
        _open.erase( key );

        if ( won )
            _won.insert( key );
        else
        {
            _lost.insert( key );
            _new_loss = true;
        }
        return won;
    }

    template <typename Sub>
    bool spec_demands_met( StateIndex p, StateIndex q, Sub& sub )
    {
        if ( _flavor == Flavor::IA )
        {
            // Every spec input is matched by the same impl input.
            for ( const auto& t : _spec.mays() )
            {
                if ( t.source != q || !_spec.alphabet().is_input( t.label ) )
                    continue;
                bool ok = false;
                for ( const auto& u : _impl.mays() )
                    if ( u.source == p && u.label == t.label && sub( u.target, t.target ) )
                    {
                        ok = true;
                        break;
                    }
                if ( !ok )
                    return false;
            }
            return true;
        }
        for ( const auto& m : _spec.musts() )
        {
            if ( m.source != q )
                continue;
            bool ok = false;
            for ( const auto& n : _impl.musts() )
            {
                if ( n.source != p || n.label != m.label )
                    continue;
                bool all = true;
                for ( StateIndex x : n.targets )
                {
                    bool any = false;
                    for ( StateIndex y : m.targets )
                        if ( sub( x, y ) )
                        {
                            any = true;
                            break;
                        }
                    if ( !any )
                    {
                        all = false;
                        break;
                    }
                }
                if ( all )
                {
                    ok = true;
                    break;
                }
            }
            if ( !ok )
                return false;
        }
        return true;
    }

    template <typename Sub>
    bool impl_moves_answered( StateIndex p, StateIndex q, Sub& sub )
    {
        for ( const auto& t : _impl.mays() )
        {
            if ( t.source != p )
                continue;
            if ( _flavor != Flavor::DMTS && _impl.alphabet().is_input( t.label ) )
                continue;
            bool ok = false;
            for ( StateIndex y : _spec_paths.after( q, t.label, true ) )
                if ( sub( t.target, y ) )
                {
                    ok = true;
                    break;
                }
            if ( !ok )
                return false;
        }
        return true;
    }

    Flavor _flavor;
    const ModalAutomaton& _impl;
    const ModalAutomaton& _spec;
    Paths _spec_paths;
    std::set<Key> _lost;
    std::set<Key> _won;
    std::set<Key> _open;
    bool _new_loss = false;
};

} // namespace

bool oracle_refines( Flavor flavor, const ModalAutomaton& impl, const ModalAutomaton& spec, StateIndex impl_state,
                     StateIndex spec_state )
{
    Game g( flavor, impl, spec );
    return g.decide( { { impl_state, spec_state } } ).front();
}

std::vector<bool> oracle_relation( Flavor flavor, const ModalAutomaton& impl, const ModalAutomaton& spec )
{
    Game g( flavor, impl, spec );
    std::vector<std::pair<StateIndex, StateIndex>> roots;
    for ( StateIndex p = 0; p < impl.size(); ++p )
        for ( StateIndex q = 0; q < spec.size(); ++q )
            roots.emplace_back( p, q );
    return g.decide( roots );
}

} // namespace testkit
