#pragma once

#include <modint/modint.hpp>

#include <algorithm>
#include <string>
#include <vector>

inline modint::ModalAutomaton A( std::string_view text ) { return modint::parse( text ); }

inline std::string corpus( const std::string& file ) { return std::string( MODINT_CORPUS_DIR ) + "/" + file; }

inline modint::ModalAutomaton load( const std::string& file ) { return modint::read_file( corpus( file ) ); }

inline std::vector<std::string> rules( const modint::ModalAutomaton& a )
{
    std::vector<std::string> out;
    for ( const auto& v : modint::validate( a ) )
        out.push_back( v.rule );
    return out;
}

inline bool has_rule( const modint::ModalAutomaton& a, const std::string& rule )
{
    auto r = rules( a );
    return std::find( r.begin(), r.end(), rule ) != r.end();
}

/// Names of the given product states.
inline std::vector<std::string> names( const modint::ModalAutomaton& a, const std::vector<modint::StateIndex>& xs )
{
    std::vector<std::string> out;
    for ( auto x : xs )
        out.push_back( a.state( x ).str() );
    std::sort( out.begin(), out.end() );
    return out;
}

inline std::vector<std::string> targets( const modint::ModalAutomaton& a, std::string_view source,
                                         std::string_view label )
{
    std::vector<std::string> out;
    for ( auto t : a.may_targets( a.index_of( source ), label ) )
        out.push_back( a.state( t ).str() );
    return out;
}

inline std::vector<std::vector<std::string>> must_sets( const modint::ModalAutomaton& a, std::string_view source,
                                                        std::string_view label )
{
    std::vector<std::vector<std::string>> out;
    for ( const auto& ts : a.must_targets( a.index_of( source ), label ) )
        out.push_back( names( a, ts ) );
    return out;
}

inline bool holds( const modint::ModalAutomaton& impl, const modint::ModalAutomaton& spec )
{
    return modint::refines( impl, spec ).holds;
}
