#pragma once

#include "illation/core.hpp"
#include "illation/notation.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace illation
{

// Peirce's 1909 matrices. Rows are the left operand and columns the right,
// both in the order V, L, F.
struct triadic_tables
{
    std::array< triad, 3 > negation;
    std::array< std::array< triad, 3 >, 3 > oplus;
    std::array< std::array< triad, 3 >, 3 > zconj;
};

[[nodiscard]] const triadic_tables& peirce_triadic_tables();

[[nodiscard]] constexpr std::size_t triad_index( triad v ) { return static_cast< std::size_t >( v ); }

[[nodiscard]] triad triadic_not( triad v );
[[nodiscard]] triad triadic_or( triad a, triad b );  // ⊕
[[nodiscard]] triad triadic_and( triad a, triad b ); // underlined Z

class unsupported_connective : public std::runtime_error
{
    connective _op;

public:
    explicit unsupported_connective( connective op );
    [[nodiscard]] connective op() const { return _op; }
};

// Negation, disjunction (⊕) and conjunction (underlined Z) only; constants map t to V
// and f to F. Any other connective throws unsupported_connective.
[[nodiscard]] triad eval3( const formula& f, const assignment3& a );

struct triadic_row
{
    assignment3 assignment;
    triad value;
};

// 3^n rows, V before L before F, leftmost variable varying slowest.
struct triadic_table
{
    std::vector< variable_name > variables;
    std::vector< triadic_row > rows;
};

[[nodiscard]] triadic_table make_triadic_table( const formula& f, std::size_t variable_limit = 12 );

struct restriction_mismatch
{
    std::string table;
    triad left;
    triad right; // equal to left for the unary table
    triad triadic_value;
    truth bivalent_value;
};

struct restriction_report
{
    std::size_t cells_checked = 0;
    std::vector< restriction_mismatch > mismatches;

    [[nodiscard]] bool passed() const { return mismatches.empty(); }
};

// Restricts the three matrices to {V, F} and compares them cell by cell with
// bivalent negation, disjunction and conjunction under V=t, F=f.
[[nodiscard]] restriction_report restriction_check();

// Extension beyond Peirce's tables: whether every row of the triadic table
// takes a designated value. The designated set defaults to {V}.
[[nodiscard]] bool designated_tautology( const formula& f, const std::set< triad >& designated = { triad::V } );

// Tab-separated, headed as in the notebook: x and its negation, then the ⊕
// and underlined Z matrices.
[[nodiscard]] std::string render_triadic_negation( text_encoding enc );
[[nodiscard]] std::string render_triadic_oplus( text_encoding enc );
[[nodiscard]] std::string render_triadic_zconj( text_encoding enc );

[[nodiscard]] std::string render_triadic_table( const triadic_table& table, const formula& f, syntax_config config );

} // namespace illation
