#include "modint/automaton.hpp"

#include "modint/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace modint
{

std::string_view to_string( Flavor flavor )
{
    switch ( flavor )
    {
    case Flavor::IA:
        return "ia";
    case Flavor::DMTS:
        return "dmts";
    case Flavor::MIA:
        return "mia";
    }
    return "?";
}

std::set<std::string, std::less<>> Alphabet::actions() const
{
    auto all = inputs;
    all.insert( outputs.begin(), outputs.end() );
    return all;
}

// ---------------------------------------------------------------------------
// ModalAutomaton

std::optional<StateIndex> ModalAutomaton::find( const StateName& name ) const
{
    return find( std::string_view( name.str() ) );
}

std::optional<StateIndex> ModalAutomaton::find( std::string_view canonical ) const
{
    auto it = _index.find( canonical );
    if ( it == _index.end() )
        return std::nullopt;
    return it->second;
}

StateIndex ModalAutomaton::index_of( std::string_view canonical ) const
{
    auto s = find( canonical );
    if ( !s )
        throw std::out_of_range( "no state '" + std::string( canonical ) + "' in automaton " + _name );
    return *s;
}

std::span<const StateIndex> ModalAutomaton::may_targets( StateIndex s, std::string_view label ) const
{
    const auto& out = _may_out.at( s );
    auto it = out.find( label );
    if ( it == out.end() )
        return {};
    return it->second;
}

std::span<const std::vector<StateIndex>> ModalAutomaton::must_targets( StateIndex s, std::string_view label ) const
{
    const auto& out = _must_out.at( s );
    auto it = out.find( label );
    if ( it == out.end() )
        return {};
    return it->second;
}

bool ModalAutomaton::has_may( StateIndex s, std::string_view label, StateIndex t ) const
{
    auto targets = may_targets( s, label );
    return std::binary_search( targets.begin(), targets.end(), t );
}

std::vector<std::string> ModalAutomaton::labels() const
{
    std::set<std::string> all;
    for ( const auto& t : _mays )
        all.insert( t.label );
    for ( const auto& t : _musts )
        all.insert( t.label );
    return { all.begin(), all.end() };
}

// ---------------------------------------------------------------------------
// AutomatonBuilder

AutomatonBuilder::AutomatonBuilder( Flavor flavor, std::string name, Alphabet alphabet )
        : _flavor( flavor ), _name( std::move( name ) ), _alphabet( std::move( alphabet ) )
{}

AutomatonBuilder::AutomatonBuilder( const ModalAutomaton& automaton )
        : AutomatonBuilder( automaton.flavor(), automaton.name(), automaton.alphabet() )
{
    for ( const auto& s : automaton.states() )
        add_state( s );
    _initial = automaton.initial();
    for ( const auto& t : automaton.mays() )
        _mays.emplace( t.source, t.label, t.target );
    for ( const auto& t : automaton.musts() )
        _musts.emplace( t.source, t.label, std::vector<Handle>( t.targets.begin(), t.targets.end() ) );
}

AutomatonBuilder::Handle AutomatonBuilder::add_state( const StateName& name )
{
    auto [ it, inserted ] = _lookup.emplace( name, _names.size() );
    if ( inserted )
    {
        _names.push_back( name );
        _removed.push_back( false );
    }
    else if ( _removed[ it->second ] )
        _removed[ it->second ] = false;
    return it->second;
}

std::optional<AutomatonBuilder::Handle> AutomatonBuilder::find( const StateName& name ) const
{
    auto it = _lookup.find( name );
    if ( it == _lookup.end() || _removed[ it->second ] )
        return std::nullopt;
    return it->second;
}

void AutomatonBuilder::add_may( Handle source, std::string label, Handle target )
{
    _mays.emplace( source, std::move( label ), target );
}

void AutomatonBuilder::add_must( Handle source, std::string label, std::vector<Handle> targets )
{
    std::sort( targets.begin(), targets.end() );
    targets.erase( std::unique( targets.begin(), targets.end() ), targets.end() );
    _musts.emplace( source, std::move( label ), std::move( targets ) );
}

void AutomatonBuilder::add_ia( Handle source, const std::string& label, Handle target )
{
    add_may( source, label, target );
    if ( _alphabet.is_input( label ) )
        add_must( source, label, { target } );
}

void AutomatonBuilder::remove_state( Handle h )
{
    remove_states( { h } );
}

void AutomatonBuilder::remove_states( const std::vector<Handle>& hs )
{
    if ( hs.empty() )
        return;
    std::vector<bool> gone( _names.size(), false );
    for ( Handle h : hs )
    {
        if ( _initial && *_initial == h )
            throw std::logic_error( "cannot remove the initial state" );
        _removed.at( h ) = true;
        gone[ h ] = true;
    }
    std::erase_if( _mays, [ & ]( const MayKey& t ) { return gone[ std::get<0>( t ) ] || gone[ std::get<2>( t ) ]; } );
    std::set<MustKey> kept;
    for ( auto [ source, label, targets ] : _musts )
    {
        if ( gone[ source ] )
            continue;
        std::erase_if( targets, [ & ]( Handle t ) { return gone[ t ]; } );
        if ( !targets.empty() )
            kept.emplace( source, std::move( label ), std::move( targets ) );
    }
    _musts = std::move( kept );
}

ModalAutomaton AutomatonBuilder::build() const
{
    if ( !_initial )
        throw std::logic_error( "automaton " + _name + " has no initial state" );
    if ( _removed.at( *_initial ) )
        throw std::logic_error( "initial state of " + _name + " was removed" );

    ModalAutomaton a;
    a._flavor = _flavor;
    a._name = _name;
    a._alphabet = _alphabet;

    // _lookup iterates in canonical order, which defines the final indices.
    std::vector<StateIndex> remap( _names.size(), 0 );
    for ( const auto& [ name, handle ] : _lookup )
    {
        if ( _removed[ handle ] )
            continue;
        remap[ handle ] = static_cast<StateIndex>( a._states.size() );
        a._index.emplace( name.str(), static_cast<StateIndex>( a._states.size() ) );
        a._states.push_back( name );
    }
    a._initial = remap[ *_initial ];

    auto live = [ this ]( Handle h ) {
        if ( h >= _removed.size() || _removed[ h ] )
            throw std::logic_error( "transition refers to a state that is not part of " + _name );
        return true;
    };

    for ( const auto& [ source, label, target ] : _mays )
    {
        live( source );
        live( target );
        a._mays.push_back( { remap[ source ], label, remap[ target ] } );
    }
    for ( const auto& [ source, label, targets ] : _musts )
    {
        live( source );
        std::vector<StateIndex> ts;
        for ( Handle t : targets )
        {
            live( t );
            ts.push_back( remap[ t ] );
        }
        std::sort( ts.begin(), ts.end() );
        a._musts.push_back( { remap[ source ], label, std::move( ts ) } );
    }
    std::sort( a._mays.begin(), a._mays.end() );
    std::sort( a._musts.begin(), a._musts.end() );

    a._may_out.resize( a._states.size() );
    a._must_out.resize( a._states.size() );
    for ( const auto& t : a._mays )
        a._may_out[ t.source ][ t.label ].push_back( t.target );
    for ( const auto& t : a._musts )
        a._must_out[ t.source ][ t.label ].push_back( t.targets );
    return a;
}

// ---------------------------------------------------------------------------
// validate

namespace
{

std::string describe_targets( const ModalAutomaton& a, const std::vector<StateIndex>& targets )
{
    std::ostringstream os;
    os << "{";
    for ( std::size_t k = 0; k < targets.size(); ++k )
        os << ( k ? "," : "" ) << a.state( targets[ k ] ).str();
    os << "}";
    return os.str();
}

} // namespace

std::vector<Violation> validate( const ModalAutomaton& a )
{
    std::vector<Violation> out;
    auto report = [ & ]( std::string rule, std::string message, std::optional<StateIndex> state = {},
                         std::optional<std::string> label = {} ) {
        out.push_back( { std::move( rule ), std::move( message ), state, std::move( label ) } );
    };
    const Alphabet& alph = a.alphabet();

    for ( const auto& i : alph.inputs )
        if ( alph.is_output( i ) )
            report( "alphabet-disjoint", "action '" + i + "' is both input and output" );
    if ( alph.contains( tau ) )
        report( "tau-in-alphabet", "the silent action may not be declared as an action" );

    for ( const auto& t : a.mays() )
    {
        if ( !is_tau( t.label ) && !alph.contains( t.label ) )
            report( "unknown-label", "may " + a.state( t.source ).str() + " -" + t.label + "-> "
                                         + a.state( t.target ).str() + " uses an undeclared action",
                    t.source, t.label );
    }

    for ( const auto& t : a.musts() )
    {
        const std::string& src = a.state( t.source ).str();
        if ( is_tau( t.label ) )
            report( "tau-must", "must-transition on tau at " + src, t.source, t.label );
        else if ( !alph.contains( t.label ) )
            report( "unknown-label", "must at " + src + " uses undeclared action '" + t.label + "'", t.source,
                    t.label );
        if ( t.targets.empty() )
            report( "empty-must-target", "must " + src + " -" + t.label + "-> {} has no targets", t.source,
                    t.label );
        for ( StateIndex target : t.targets )
            if ( !a.has_may( t.source, t.label, target ) )
                report( "syntactic-consistency",
                        "must " + src + " -" + t.label + "-> " + describe_targets( a, t.targets )
                            + " lacks the may-transition to " + a.state( target ).str(),
                        t.source, t.label );
    }

    if ( a.flavor() == Flavor::IA )
    {
        for ( const auto& t : a.musts() )
        {
            if ( !is_tau( t.label ) && !alph.is_input( t.label ) )
                report( "ia-output-must", "IA must-transitions exist only for inputs; found '" + t.label + "' at "
                                              + a.state( t.source ).str(),
                        t.source, t.label );
            if ( t.targets.size() > 1 )
                report( "ia-disjunctive-must", "IA transitions have a single target; found "
                                                   + describe_targets( a, t.targets ) + " at "
                                                   + a.state( t.source ).str(),
                        t.source, t.label );
        }
        for ( StateIndex s = 0; s < a.size(); ++s )
            for ( const auto& [ label, targets ] : a.may_out( s ) )
            {
                if ( !alph.is_input( label ) )
                    continue;
                if ( targets.size() > 1 )
                    report( "input-determinism", "state " + a.state( s ).str() + " has "
                                                     + std::to_string( targets.size() ) + " '" + label
                                                     + "'-successors",
                            s, label );
                for ( StateIndex t : targets )
                {
                    bool covered = false;
                    for ( const auto& m : a.must_targets( s, label ) )
                        covered = covered || ( m.size() == 1 && m.front() == t );
                    if ( !covered )
                        report( "ia-input-may-without-must", "input '" + label + "' at " + a.state( s ).str()
                                                                 + " is not stored as a must-transition",
                                s, label );
                }
            }
    }

    if ( a.flavor() == Flavor::MIA )
    {
        for ( StateIndex s = 0; s < a.size(); ++s )
        {
            for ( const auto& [ label, sets ] : a.must_out( s ) )
                if ( alph.is_input( label ) && sets.size() > 1 )
                    report( "input-determinism", "state " + a.state( s ).str() + " has "
                                                     + std::to_string( sets.size() ) + " must-transitions on input '"
                                                     + label + "'",
                            s, label );
            for ( const auto& [ label, targets ] : a.may_out( s ) )
            {
                if ( !alph.is_input( label ) )
                    continue;
                for ( StateIndex t : targets )
                {
                    bool covered = false;
                    for ( const auto& m : a.must_targets( s, label ) )
                        covered = covered || std::binary_search( m.begin(), m.end(), t );
                    if ( !covered )
                        report( "input-may-without-must", "input may " + a.state( s ).str() + " -" + label + "-> "
                                                              + a.state( t ).str()
                                                              + " is not underlain by an input must-transition",
                                s, label );
                }
            }
        }
    }
    return out;
}

void require_valid( const ModalAutomaton& a, Flavor expected, std::string_view role )
{
    if ( a.flavor() != expected )
        throw FlavorMismatch( std::string( role ) + " " + a.name() + " is a " + std::string( to_string( a.flavor() ) )
                              + ", expected " + std::string( to_string( expected ) ) );
    auto violations = validate( a );
    if ( violations.empty() )
        return;
    std::vector<std::string> details;
    for ( const auto& v : violations )
        details.push_back( v.rule + ": " + v.message );
    std::string message = std::string( role ) + " " + a.name() + " is not a valid "
                          + std::string( to_string( expected ) ) + ": " + details.front();
    throw InvalidAutomaton( message, std::move( details ) );
}

// ---------------------------------------------------------------------------
// Structural helpers

namespace
{

ModalAutomaton map_states( const ModalAutomaton& a, const std::function<StateName( const StateName& )>& f )
{
    AutomatonBuilder b( a.flavor(), a.name(), a.alphabet() );
    std::vector<AutomatonBuilder::Handle> h;
    for ( const auto& s : a.states() )
        h.push_back( b.add_state( f( s ) ) );
    b.set_initial( h[ a.initial() ] );
    for ( const auto& t : a.mays() )
        b.add_may( h[ t.source ], t.label, h[ t.target ] );
    for ( const auto& t : a.musts() )
    {
        std::vector<AutomatonBuilder::Handle> ts;
        for ( StateIndex x : t.targets )
            ts.push_back( h[ x ] );
        b.add_must( h[ t.source ], t.label, std::move( ts ) );
    }
    return b.build();
}

} // namespace

std::pair<ModalAutomaton, ModalAutomaton> rename_disjoint( const ModalAutomaton& a, const ModalAutomaton& b )
{
    bool overlap = false;
    for ( const auto& s : a.states() )
        overlap = overlap || b.find( s ).has_value();
    if ( !overlap )
        return { a, b };
    return { map_states( a, []( const StateName& n ) { return StateName::tagged( n, Side::Left ); } ),
             map_states( b, []( const StateName& n ) { return StateName::tagged( n, Side::Right ); } ) };
}

ModalAutomaton underlying_dmts( const ModalAutomaton& a )
{
    AutomatonBuilder b( a );
    b.set_flavor( Flavor::DMTS );
    b.set_alphabet( Alphabet{ {}, a.alphabet().actions() } );
    return b.build();
}

ModalAutomaton trim_unreachable( const ModalAutomaton& a )
{
    std::vector<bool> seen( a.size(), false );
    std::deque<StateIndex> queue{ a.initial() };
    seen[ a.initial() ] = true;
    while ( !queue.empty() )
    {
        StateIndex s = queue.front();
        queue.pop_front();
        auto visit = [ & ]( StateIndex t ) {
            if ( !seen[ t ] )
            {
                seen[ t ] = true;
                queue.push_back( t );
            }
        };
        for ( const auto& [ label, targets ] : a.may_out( s ) )
            for ( StateIndex t : targets )
                visit( t );
        for ( const auto& [ label, sets ] : a.must_out( s ) )
            for ( const auto& set : sets )
                for ( StateIndex t : set )
                    visit( t );
    }
    AutomatonBuilder b( a );
    for ( StateIndex s = 0; s < a.size(); ++s )
        if ( !seen[ s ] )
            b.remove_state( s );
    return b.build();
}

ModalAutomaton renamed( const ModalAutomaton& a, std::string name )
{
    AutomatonBuilder b( a );
    b.set_name( std::move( name ) );
    return b.build();
}

ModalAutomaton with_initial( const ModalAutomaton& a, StateIndex initial )
{
    AutomatonBuilder b( a );
    b.set_initial( initial );
    return b.build();
}

} // namespace modint
