#include "support.hpp"

namespace illation::detail
{

std::size_t display_width( std::string_view s )
{
    std::size_t width = 0;
    for ( std::size_t i = 0; i < s.size(); ) {
        auto lead = static_cast< unsigned char >( s[ i ] );
        std::size_t len = lead < 0x80 ? 1 : lead < 0xE0 ? 2 : lead < 0xF0 ? 3 : 4;
        char32_t cp = 0;
        if ( len == 1 )
            cp = lead;
        else {
            cp = lead & ( 0x3F >> ( len - 1 ) );
            for ( std::size_t k = 1; k < len && i + k < s.size(); ++k )
                cp = ( cp << 6 ) | ( static_cast< unsigned char >( s[ i + k ] ) & 0x3F );
        }
        if ( cp < 0x300 || cp > 0x36F )
            ++width;
        i += len;
    }
    return width;
}

std::string pad_right( std::string_view s, std::size_t width )
{
    std::string out( s );
    for ( auto w = display_width( s ); w < width; ++w )
        out += ' ';
    return out;
}

std::string join( const std::vector< std::string >& parts, std::string_view sep )
{
    std::string out;
    for ( std::size_t i = 0; i < parts.size(); ++i ) {
        if ( i != 0 )
            out += sep;
        out += parts[ i ];
    }
    return out;
}

} // namespace illation::detail
