#pragma once

#include "illation/core.hpp"
#include "illation/notation.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace illation
{

class limit_exceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t default_variable_limit = 20;

[[nodiscard]] truth eval( const formula& f, const assignment2& a );

struct truth_table_row
{
    assignment2 assignment;
    truth value;
};

// Rows in canonical order: t before f, leftmost variable varying slowest.
struct truth_table
{
    std::vector< variable_name > variables;
    std::vector< truth_table_row > rows;
};

[[nodiscard]] truth_table make_truth_table( const formula& f, std::size_t variable_limit = default_variable_limit );

// Rows are the left operand, columns the right operand, both in order t, f.
struct matrix_table
{
    connective id;
    std::array< std::array< truth, 2 >, 2 > cells;
};

[[nodiscard]] matrix_table make_matrix_table( connective c );

enum class verdict_class { tautology, contradiction, contingent };

[[nodiscard]] std::string_view to_string( verdict_class v );

// Witnesses are the first qualifying rows in canonical order.
struct verdict
{
    verdict_class kind;
    std::optional< assignment2 > falsifying;
    std::optional< assignment2 > satisfying;
};

[[nodiscard]] verdict classify( const formula& f, std::size_t variable_limit = default_variable_limit );

struct entailment
{
    bool valid;
    std::optional< assignment2 > counterexample;
};

// Rows are searched f-first, so the counterexample is the one with the most
// leading f values.
[[nodiscard]] entailment entails( const std::vector< formula >& premises, const formula& conclusion,
                                  std::size_t variable_limit = default_variable_limit );

enum class row_order { t_first, f_first };

// Text renderings. The header repeats the variable names and the formula in
// the given syntax; value glyphs follow value_glyph().
[[nodiscard]] std::string render_truth_table( const truth_table& table, const formula& f, syntax_config config,
                                              row_order order = row_order::t_first );

// "is true when / is false when" listing, one clause per row.
[[nodiscard]] std::string render_truth_conditions( const truth_table& table, const formula& f, syntax_config config,
                                                   row_order order = row_order::t_first );

[[nodiscard]] std::string render_matrix( const matrix_table& m, notation_id n = notation_id::modern );

[[nodiscard]] std::string render_assignment( const assignment2& a, notation_id n = notation_id::modern );

} // namespace illation
