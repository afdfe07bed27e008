#pragma once

#include "illation/core.hpp"
#include "illation/notation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace illation
{

// Indexed by position in subformulas(f); nullopt is an unconstrained cell.
using partial_assignment = std::vector< std::optional< truth > >;

enum class step_note { root_assumption, forced, branch_open, branch_closed };

[[nodiscard]] std::string_view to_string( step_note n );

// One side (or both) of a binary node fixed by a case split.
struct case_literal
{
    std::size_t column;
    truth value;

    friend bool operator==( const case_literal&, const case_literal& ) = default;
};

struct trace_step
{
    partial_assignment values;
    step_note note;
    // Step this one extends; absent only for the root assumption.
    std::optional< std::size_t > parent;
    // Column whose connective rule produced the step (forced, branch-open,
    // branch-closed) or the whole formula for the root assumption.
    std::size_t source = 0;
    // branch-open: the case assumed, and its position among the cases.
    std::vector< case_literal > assumed;
    std::size_t case_number = 0;
    std::size_t case_count = 0;
    // branch-closed: the column the rule would force to the opposite value.
    // Equal to `source` when the node itself can take no value (a constant,
    // or a connective that never yields the required value).
    std::optional< std::size_t > conflict;
};

struct indirect_trace
{
    std::vector< formula > columns;
    std::vector< trace_step > steps;
};

enum class indirect_outcome { tautology, falsifiable };

[[nodiscard]] std::string_view to_string( indirect_outcome o );

struct indirect_result
{
    indirect_outcome outcome;
    // Only the variables the procedure had to fix; the rest are listed in
    // `unconstrained` and may take either value.
    std::optional< assignment2 > countermodel;
    std::vector< variable_name > unconstrained;
    indirect_trace trace;
};

// Assumes f false and propagates. A constrained node c(P, Q) = w forces P (or
// Q) when every input pair giving w agrees on it. When the known child values
// do not yet guarantee w, the procedure splits into the prime implicants of
// the pairs giving w, taken in canonical pair order. A branch closes when a
// column is forced both ways.
[[nodiscard]] indirect_result indirect_check( const formula& f );

// Header of subformula renderings, then one line per step with '-' for
// unconstrained cells.
[[nodiscard]] std::string render_trace( const indirect_trace& trace, syntax_config config );

} // namespace illation
