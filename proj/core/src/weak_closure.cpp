#include "modint/weak_closure.hpp"

#include <algorithm>

namespace modint
{

namespace
{

const std::vector<StateIndex> no_states;

} // namespace

WeakClosure::WeakClosure( const ModalAutomaton& a ) : _eps( a.size() )
{
    const std::size_t n = a.size();

    // eps: DFS over tau-mays from every state.
    for ( StateIndex q = 0; q < n; ++q )
    {
        std::vector<bool> seen( n, false );
        std::vector<StateIndex> stack{ q };
        seen[ q ] = true;
        while ( !stack.empty() )
        {
            StateIndex s = stack.back();
            stack.pop_back();
            for ( StateIndex t : a.may_targets( s, tau ) )
                if ( !seen[ t ] )
                {
                    seen[ t ] = true;
                    stack.push_back( t );
                }
        }
        for ( StateIndex s = 0; s < n; ++s )
            if ( seen[ s ] )
                _eps[ q ].push_back( s );
    }

    for ( const auto& label : a.labels() )
    {
        std::vector<std::vector<StateIndex>> rel( n );
        bool any = false;
        for ( StateIndex q = 0; q < n; ++q )
        {
            auto& out = rel[ q ];
            for ( StateIndex mid : _eps[ q ] )
            {
                auto targets = a.may_targets( mid, label );
                out.insert( out.end(), targets.begin(), targets.end() );
            }
            std::sort( out.begin(), out.end() );
            out.erase( std::unique( out.begin(), out.end() ), out.end() );
            any = any || !out.empty();
        }
        if ( any )
            _weak.emplace( label, std::move( rel ) );
    }
}

const std::vector<StateIndex>& WeakClosure::weak( StateIndex q, std::string_view label ) const
{
    auto it = _weak.find( label );
    if ( it == _weak.end() )
        return no_states;
    return it->second.at( q );
}

const std::vector<StateIndex>& WeakClosure::hat( StateIndex q, std::string_view label ) const
{
    return is_tau( label ) ? eps( q ) : weak( q, label );
}

std::vector<std::string> WeakClosure::labels() const
{
    std::vector<std::string> out;
    for ( const auto& [ label, rel ] : _weak )
        out.push_back( label );
    return out;
}

std::vector<std::pair<StateIndex, StateIndex>> WeakClosure::eps_pairs() const
{
    std::vector<std::pair<StateIndex, StateIndex>> out;
    for ( StateIndex q = 0; q < _eps.size(); ++q )
        for ( StateIndex t : _eps[ q ] )
            out.emplace_back( q, t );
    return out;
}

std::vector<std::pair<StateIndex, StateIndex>> WeakClosure::weak_pairs( std::string_view label ) const
{
    std::vector<std::pair<StateIndex, StateIndex>> out;
    for ( StateIndex q = 0; q < _eps.size(); ++q )
        for ( StateIndex t : weak( q, label ) )
            out.emplace_back( q, t );
    return out;
}

} // namespace modint
