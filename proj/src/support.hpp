#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace illation::detail
{

template < typename... Ts >
struct overloaded : Ts...
{
    using Ts::operator()...;
};

// Number of terminal columns a UTF-8 string occupies, assuming every code
// point is one column wide except combining marks (U+0300..U+036F), which
// take none.
[[nodiscard]] std::size_t display_width( std::string_view s );

[[nodiscard]] std::string pad_right( std::string_view s, std::size_t width );

[[nodiscard]] std::string join( const std::vector< std::string >& parts, std::string_view sep );

} // namespace illation::detail
