#pragma once

#include "illation/bivalent.hpp"
#include "illation/core.hpp"

#include <functional>
#include <string>
#include <vector>

namespace illation
{

// The 4x16 grid exactly as printed, rows in input-pair order, plus notes on
// where it departs from a bijection onto the sixteen truth functions.
struct printed_grid
{
    std::array< std::array< truth, 16 >, 4 > rows;
    std::vector< std::string > annotations;

    [[nodiscard]] truth_vector column( int number ) const;
};

[[nodiscard]] const printed_grid& paper_table();

// Columns that duplicate an earlier column of the printed grid, as
// (earlier, later) pairs, and the vectors the grid never shows.
[[nodiscard]] std::vector< std::pair< int, int > > duplicate_columns( const printed_grid& grid );
[[nodiscard]] std::vector< truth_vector > missing_vectors( const printed_grid& grid );

[[nodiscard]] std::string render_paper_table( const printed_grid& grid );

// Closed positions of Peirce's X-frame, indexed like input_pairs. A position
// is closed iff the connective is false there. Frame positions are fixed by
// convention: top (t,t), right (t,f), left (f,t), bottom (f,f).
struct xframe
{
    std::array< bool, 4 > closed;

    friend bool operator==( const xframe&, const xframe& ) = default;
};

[[nodiscard]] xframe xframe_of( connective c );
[[nodiscard]] connective connective_of( const xframe& x );

// Three lines of glyph followed by "closed: tt,tf,..." (or "closed: none").
// Each closed position draws the half-diagonal on the clockwise side of its
// quadrant: top '/', right '\', bottom '/', left '\'.
[[nodiscard]] std::string render_xframe( const xframe& x );

[[nodiscard]] connective identify( const truth_vector& values );
[[nodiscard]] connective identify( const matrix_table& m );

[[nodiscard]] std::string render_catalog();

enum class shape_policy { all_trees, right_combs };

[[nodiscard]] std::string_view to_string( shape_policy p );

struct enumeration_spec
{
    int max_variables = 3;
    int max_slots = 3;
    shape_policy shapes = shape_policy::right_combs;
    std::size_t emit_limit = 100;
};

inline constexpr int max_enumeration_variables = 3;
inline constexpr int max_enumeration_slots = 5;

struct enumerated_tautology
{
    formula f;
    std::vector< connective > slots; // pre-order
};

struct slot_summary
{
    int slots = 0;
    std::size_t shapes = 0;
    std::size_t candidates = 0;
    std::size_t tautologies = 0;
    // Counting only leaf fillings whose variables first appear in order
    // p, q, r: the same formula up to renaming of variables counts once.
    std::size_t distinct_up_to_renaming = 0;
};

struct enumeration_summary
{
    std::vector< slot_summary > per_slots;
    std::size_t emitted = 0;

    [[nodiscard]] std::size_t total_tautologies() const;
    [[nodiscard]] std::size_t total_distinct() const;
    [[nodiscard]] std::size_t total_candidates() const;
};

// Every shape with up to spec.max_slots binary nodes, leaves from the first
// max_variables of p, q, r (repetition allowed), every slot filled by each of
// the 16 connectives. Tautologies are passed to `emit` in deterministic order
// (slot count, shape, leaf filling, then connectives by column, first slot
// slowest) until emit_limit is reached; counting always covers everything.
enumeration_summary enumerate_tautologies( const enumeration_spec& spec,
                                           const std::function< void( const enumerated_tautology& ) >& emit = {} );

} // namespace illation
