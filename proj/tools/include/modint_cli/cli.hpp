#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modint_cli
{

/// Exit codes of the command line tool.
enum ExitCode : int
{
    Ok = 0,
    Fails = 1,
    Usage = 2,
    Undefined = 3,
};

/// Runs one command; `args` excludes the program name.
int run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err );

} // namespace modint_cli
