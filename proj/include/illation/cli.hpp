#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace illation::cli
{

enum exit_code : int
{
    success = 0,
    not_tautology = 1, // only with `check --status`
    usage_error = 2,
    unsupported = 3,
    resource_limit = 4,
};

struct environment
{
    // Whether the environment declares a UTF-8 locale; decides the default
    // encoding when --encoding is not given.
    bool utf8 = false;
};

[[nodiscard]] bool locale_declares_utf8( const char* lc_all, const char* lc_ctype, const char* lang );

// `args` excludes the program name.
int run( const std::vector< std::string >& args, std::istream& in, std::ostream& out, std::ostream& err,
         environment env = {} );

} // namespace illation::cli
