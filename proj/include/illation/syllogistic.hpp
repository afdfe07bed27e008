#pragma once

#include "illation/bivalent.hpp"
#include "illation/core.hpp"
#include "illation/notation.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace illation
{

enum class figure { A, E, I, O };

[[nodiscard]] std::optional< figure > parse_figure( std::string_view s );
[[nodiscard]] char to_char( figure f );

struct categorical_form
{
    figure kind;
    variable_name subject;
    variable_name predicate;
};

// A: a ≺ b, E: a ≺ not-b, I: ǎ ≺ b, O: ǎ ≺ not-b, with the notation's implication and
// negation. The breve is a combining caron in unicode and a prefix '?' in
// ascii; it is never evaluated.
[[nodiscard]] std::string render_categorical( const categorical_form& c, syntax_config config );

class quantified_form : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Universal forms only: A gives subject ≺ predicate, E subject ≺ ¬predicate.
// I and O throw quantified_form.
[[nodiscard]] formula as_formula( const categorical_form& c );

struct barbara_forms
{
    formula nested;      // (x≺y) ≺ ((y≺z) ≺ (x≺z))
    formula conjunctive; // ((x≺y)·(y≺z)) ≺ (x≺z)
    verdict nested_verdict;
    verdict conjunctive_verdict;
};

[[nodiscard]] barbara_forms barbara( const variable_name& x, const variable_name& y, const variable_name& z );

// The four-line A/E/I/O scheme with English glosses.
[[nodiscard]] std::string render_aeio_table( syntax_config config );

} // namespace illation
