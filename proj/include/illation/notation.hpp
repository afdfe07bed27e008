#pragma once

#include "illation/core.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace illation
{

enum class notation_id { peirce, schroeder, peano_russell, modern };
enum class text_encoding { unicode, ascii };

inline constexpr std::array< notation_id, 4 > all_notations{ notation_id::peirce, notation_id::schroeder,
                                                          notation_id::peano_russell, notation_id::modern };
inline constexpr std::array< text_encoding, 2 > all_encodings{ text_encoding::unicode, text_encoding::ascii };

struct syntax_config
{
    notation_id notation = notation_id::modern;
    text_encoding encoding = text_encoding::unicode;

    friend bool operator==( const syntax_config&, const syntax_config& ) = default;
};

[[nodiscard]] std::string_view to_string( notation_id n );
[[nodiscard]] std::string_view to_string( text_encoding e );
[[nodiscard]] std::optional< notation_id > parse_notation( std::string_view s );
[[nodiscard]] std::optional< text_encoding > parse_encoding( std::string_view s );

// First failure found while lexing or parsing. `position` is a byte offset
// into the input and never exceeds its length.
class parse_error : public std::runtime_error
{
    std::size_t _position;
    std::vector< std::string > _expected;

public:
    parse_error( std::size_t position, const std::string& message, std::vector< std::string > expected = {} );

    [[nodiscard]] std::size_t position() const { return _position; }
    [[nodiscard]] const std::vector< std::string >& expected() const { return _expected; }
};

// Parses one formula. Either encoding of the configured notation is accepted
// on input; brackets [ ] and { } group like parentheses. Precedence, tightest
// first: negation, conjunction, disjunction, implication, equivalence.
// Implication and equivalence associate to the right, conjunction and
// disjunction to the left.
[[nodiscard]] formula parse( std::string_view text, syntax_config config );

// Renders in the configured notation and encoding. Connectives the notation
// has no symbol for are first rewritten with expand_for().
[[nodiscard]] std::string render( const formula& f, syntax_config config );

[[nodiscard]] std::string translate( std::string_view text, syntax_config from, syntax_config to );

// Whether the notation writes the connective with a symbol of its own.
[[nodiscard]] bool is_primitive( connective c, notation_id n );

// Rewrites every non-primitive binary connective of the notation into
// negation, conjunction, disjunction and implication (plus equivalence where
// the notation has it). Both operands are kept, in order, so the truth
// function over variables_of(f) is unchanged.
[[nodiscard]] formula expand_for( const formula& f, notation_id n );

// Value glyphs for tables: Peirce writes v and f, the other notations t and f.
[[nodiscard]] std::string_view value_glyph( truth v, notation_id n );

} // namespace illation
