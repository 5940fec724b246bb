#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace modint
{

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Operands of a binary operator or refinement query do not share the
/// required alphabets.
class AlphabetMismatch : public Error
{
public:
    using Error::Error;
};

/// Operands have different flavors, or a flavor the operation is not
/// defined for.
class FlavorMismatch : public Error
{
public:
    using Error::Error;
};

class NotComposable : public Error
{
public:
    NotComposable( const std::string& action, const std::string& what )
            : Error( what ), _action( action )
    {}

    [[nodiscard]] const std::string& action() const { return _action; }

private:
    std::string _action;
};

class InvalidAutomaton : public Error
{
public:
    InvalidAutomaton( const std::string& what, std::vector<std::string> details )
            : Error( what ), _details( std::move( details ) )
    {}

    [[nodiscard]] const std::vector<std::string>& details() const { return _details; }

private:
    std::vector<std::string> _details;
};

class ParseError : public Error
{
public:
    ParseError( std::size_t line, std::size_t column, const std::string& message )
            : Error( std::to_string( line ) + ":" + std::to_string( column ) + ": " + message ), _line( line ),
              _column( column )
    {}

    [[nodiscard]] std::size_t line() const { return _line; }
    [[nodiscard]] std::size_t column() const { return _column; }

private:
    std::size_t _line;
    std::size_t _column;
};

} // namespace modint
