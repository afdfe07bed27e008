#include "illation/atlas.hpp"
#include "support.hpp"

#include <memory>
#include <stdexcept>

namespace illation
{

namespace
{

std::string vector_text( const truth_vector& v, bool upper )
{
    std::string s;
    for ( auto x : v )
        s += upper ? ( x == truth::t ? 'T' : 'F' ) : glyph( x );
    return s;
}

std::string tuple_text( const truth_vector& v )
{
    std::vector< std::string > parts;
    for ( auto x : v )
        parts.emplace_back( 1, x == truth::t ? 'T' : 'F' );
    return "(" + detail::join( parts, "," ) + ")";
}

printed_grid make_printed_grid()
{
    // Transcribed row by row from the printed table.
    const std::array< std::string_view, 4 > printed{
        "FFFFTTTFFFFFTTTT",
        "FFFTFTFFTTFTFTTT",
        "FFTFFFTFTFTTTFTT",
        "FTFFFFFTFTTTTTFT",
    };
    printed_grid g{};
    for ( std::size_t r = 0; r < 4; ++r )
        for ( std::size_t c = 0; c < 16; ++c )
            g.rows[ r ][ c ] = printed[ r ][ c ] == 'T' ? truth::t : truth::f;

    for ( auto [ first, later ] : duplicate_columns( g ) )
        g.annotations.push_back( "column " + std::to_string( later ) + " as printed " +
                                 tuple_text( g.column( later ) ) + " duplicates column " + std::to_string( first ) );
    for ( const auto& v : missing_vectors( g ) ) {
        auto id = connective::from_vector( v );
        g.annotations.push_back( "vector " + tuple_text( v ) + " does not appear in the printed grid; the catalog " +
                                 "assigns it to column " + std::to_string( id.peirce_column() ) + " (" +
                                 std::string( id.name() ) + ")" );
    }
    g.annotations.push_back( "rows are read in input order (t,t), (t,f), (f,t), (f,f); the grid itself does not "
                             "label them" );
    g.annotations.push_back( "the accompanying text calls the sixteen entries rows; they are printed as columns" );
    return g;
}

struct tree
{
    std::shared_ptr< const tree > left;
    std::shared_ptr< const tree > right;

    [[nodiscard]] bool leaf() const { return !left; }
};

using tree_ptr = std::shared_ptr< const tree >;

std::vector< tree_ptr > all_shapes( int slots )
{
    if ( slots == 0 )
        return { std::make_shared< const tree >() };
    std::vector< tree_ptr > out;
    for ( int i = 0; i < slots; ++i )
        for ( const auto& l : all_shapes( i ) )
            for ( const auto& r : all_shapes( slots - 1 - i ) )
                out.push_back( std::make_shared< const tree >( tree{ l, r } ) );
    return out;
}

tree_ptr right_comb( int slots )
{
    auto t = std::make_shared< const tree >();
    for ( int i = 0; i < slots; ++i )
        t = std::make_shared< const tree >( tree{ std::make_shared< const tree >(), t } );
    return t;
}

// Row masks over 2^n rows; bit r is set iff the subformula is true in row r.
struct mask_algebra
{
    unsigned rows_mask;

    [[nodiscard]] unsigned apply( connective c, unsigned a, unsigned b ) const
    {
        unsigned out = 0;
        if ( c.apply( truth::t, truth::t ) == truth::t )
            out |= a & b;
        if ( c.apply( truth::t, truth::f ) == truth::t )
            out |= a & ~b;
        if ( c.apply( truth::f, truth::t ) == truth::t )
            out |= ~a & b;
        if ( c.apply( truth::f, truth::f ) == truth::t )
            out |= ~a & ~b;
        return out & rows_mask;
    }
};

using histogram = std::vector< std::pair< unsigned, std::uint64_t > >;

class shape_counter
{
    const mask_algebra& _alg;
    const std::vector< unsigned >& _leaf_masks;
    std::size_t _next_leaf = 0;

public:
    shape_counter( const mask_algebra& alg, const std::vector< unsigned >& leaf_masks )
        : _alg{ alg }, _leaf_masks{ leaf_masks }
    {
    }

    histogram count( const tree& t )
    {
        if ( t.leaf() )
            return { { _leaf_masks[ _next_leaf++ ], 1 } };
        auto hl = count( *t.left );
        auto hr = count( *t.right );
        std::array< std::uint64_t, 256 > dense{};
        for ( auto [ a, na ] : hl )
            for ( auto [ b, nb ] : hr )
                for ( unsigned bits = 0; bits < 16; ++bits )
                    dense[ _alg.apply( connective::from_bits( bits ), a, b ) ] += na * nb;
        histogram out;
        for ( unsigned m = 0; m < dense.size(); ++m )
            if ( dense[ m ] != 0 )
                out.emplace_back( m, dense[ m ] );
        return out;
    }
};

class shape_filler
{
    const std::vector< std::string >& _leaf_names;
    const std::vector< connective >& _slots;
    std::size_t _next_leaf = 0;
    std::size_t _next_slot = 0;

public:
    shape_filler( const std::vector< std::string >& leaf_names, const std::vector< connective >& slots )
        : _leaf_names{ leaf_names }, _slots{ slots }
    {
    }

    formula build( const tree& t )
    {
        if ( t.leaf() )
            return var( _leaf_names[ _next_leaf++ ] );
        auto c = _slots[ _next_slot++ ];
        auto l = build( *t.left );
        auto r = build( *t.right );
        return formula::binary( c, std::move( l ), std::move( r ) );
    }
};

unsigned evaluate( const tree& t, const mask_algebra& alg, const std::vector< unsigned >& leaves,
                   const std::vector< connective >& slots, std::size_t& leaf, std::size_t& slot )
{
    if ( t.leaf() )
        return leaves[ leaf++ ];
    auto c = slots[ slot++ ];
    auto a = evaluate( *t.left, alg, leaves, slots, leaf, slot );
    auto b = evaluate( *t.right, alg, leaves, slots, leaf, slot );
    return alg.apply( c, a, b );
}

bool restricted_growth( const std::vector< int >& leaves )
{
    int seen = -1;
    for ( int v : leaves ) {
        if ( v > seen + 1 )
            return false;
        seen = std::max( seen, v );
    }
    return true;
}

} // namespace

truth_vector printed_grid::column( int number ) const
{
    if ( number < 1 || number > 16 )
        throw std::out_of_range( "column must lie in 1..16" );
    truth_vector v{};
    for ( std::size_t r = 0; r < 4; ++r )
        v[ r ] = rows[ r ][ static_cast< std::size_t >( number - 1 ) ];
    return v;
}

const printed_grid& paper_table()
{
    static const printed_grid grid = make_printed_grid();
    return grid;
}

std::vector< std::pair< int, int > > duplicate_columns( const printed_grid& grid )
{
    std::vector< std::pair< int, int > > out;
    for ( int later = 1; later <= 16; ++later )
        for ( int first = 1; first < later; ++first )
            if ( grid.column( first ) == grid.column( later ) ) {
                out.emplace_back( first, later );
                break;
            }
    return out;
}

std::vector< truth_vector > missing_vectors( const printed_grid& grid )
{
    std::vector< truth_vector > out;
    for ( const auto& e : catalog() ) {
        auto v = e.id.vector();
        bool shown = false;
        for ( int c = 1; c <= 16 && !shown; ++c )
            shown = grid.column( c ) == v;
        if ( !shown )
            out.push_back( v );
    }
    return out;
}

std::string render_paper_table( const printed_grid& grid )
{
    std::vector< std::string > header;
    for ( int c = 1; c <= 16; ++c )
        header.push_back( std::to_string( c ) );
    std::string out = detail::join( header, "\t" ) + "\n";
    for ( const auto& row : grid.rows ) {
        std::vector< std::string > cells;
        for ( auto v : row )
            cells.emplace_back( 1, v == truth::t ? 'T' : 'F' );
        out += detail::join( cells, "\t" ) + "\n";
    }
    for ( const auto& note : grid.annotations )
        out += "note: " + note + "\n";
    return out;
}

xframe xframe_of( connective c )
{
    xframe x{};
    auto v = c.vector();
    for ( std::size_t i = 0; i < 4; ++i )
        x.closed[ i ] = v[ i ] == truth::f;
    return x;
}

connective connective_of( const xframe& x )
{
    truth_vector v{};
    for ( std::size_t i = 0; i < 4; ++i )
        v[ i ] = to_truth( !x.closed[ i ] );
    return connective::from_vector( v );
}

std::string render_xframe( const xframe& x )
{
    const bool top = x.closed[ 0 ];
    const bool right = x.closed[ 1 ];
    const bool left = x.closed[ 2 ];
    const bool bottom = x.closed[ 3 ];

    std::string out = " ___ \n";
    out += std::string( "|" ) + ( left ? '\\' : ' ' ) + ' ' + ( top ? '/' : ' ' ) + "|\n";
    out += std::string( "|" ) + ( bottom ? '/' : '_' ) + '_' + ( right ? '\\' : '_' ) + "|\n";

    static const std::array< std::string_view, 4 > labels{ "tt", "tf", "ft", "ff" };
    std::vector< std::string > closed;
    for ( std::size_t i = 0; i < 4; ++i )
        if ( x.closed[ i ] )
            closed.emplace_back( labels[ i ] );
    out += "closed: " + ( closed.empty() ? std::string( "none" ) : detail::join( closed, "," ) ) + "\n";
    return out;
}

connective identify( const truth_vector& values ) { return connective_from_vector( values ); }

connective identify( const matrix_table& m )
{
    truth_vector v{};
    for ( std::size_t i = 0; i < 4; ++i ) {
        auto [ l, r ] = input_pairs[ i ];
        v[ i ] = m.cells[ l == truth::t ? 0 : 1 ][ r == truth::t ? 0 : 1 ];
    }
    return identify( v );
}

std::string render_catalog()
{
    std::string out = "column  vector  name                     closed\n";
    for ( const auto& e : catalog() ) {
        auto frame = render_xframe( xframe_of( e.id ) );
        auto descriptor = frame.substr( frame.rfind( "closed: " ) + 8 );
        descriptor.pop_back();
        out += detail::pad_right( std::to_string( e.column ), 8 ) + detail::pad_right( vector_text( e.id.vector(), false ), 8 ) +
               detail::pad_right( e.name, 25 ) + descriptor;
        if ( e.provenance != "as printed" )
            out += "  [" + std::string( e.provenance ) + "]";
        out += "\n";
    }
    return out;
}

std::string_view to_string( shape_policy p ) { return p == shape_policy::all_trees ? "all-trees" : "right-combs"; }

std::size_t enumeration_summary::total_tautologies() const
{
    std::size_t n = 0;
    for ( const auto& s : per_slots )
        n += s.tautologies;
    return n;
}

std::size_t enumeration_summary::total_distinct() const
{
    std::size_t n = 0;
    for ( const auto& s : per_slots )
        n += s.distinct_up_to_renaming;
    return n;
}

std::size_t enumeration_summary::total_candidates() const
{
    std::size_t n = 0;
    for ( const auto& s : per_slots )
        n += s.candidates;
    return n;
}

enumeration_summary enumerate_tautologies( const enumeration_spec& spec,
                                           const std::function< void( const enumerated_tautology& ) >& emit )
{
    if ( spec.max_variables < 1 || spec.max_variables > max_enumeration_variables )
        throw std::invalid_argument( "enumeration needs 1.." + std::to_string( max_enumeration_variables ) +
                                     " variables" );
    if ( spec.max_slots < 0 || spec.max_slots > max_enumeration_slots )
        throw std::invalid_argument( "enumeration allows 0.." + std::to_string( max_enumeration_slots ) +
                                     " connective slots" );

    static const std::array< std::string, 3 > names{ "p", "q", "r" };
    const int n = spec.max_variables;
    const unsigned rows = 1u << n;
    const mask_algebra alg{ rows == 32 ? ~0u : ( 1u << rows ) - 1 };

    // Canonical row order: row r assigns variable i the value t iff bit
    // (n-1-i) of r is clear.
    std::vector< unsigned > var_masks( static_cast< std::size_t >( n ), 0 );
    for ( unsigned r = 0; r < rows; ++r )
        for ( int i = 0; i < n; ++i )
            if ( ( ( r >> ( n - 1 - i ) ) & 1u ) == 0 )
                var_masks[ static_cast< std::size_t >( i ) ] |= 1u << r;

    std::vector< connective > by_column;
    for ( const auto& e : catalog() )
        by_column.push_back( e.id );

    enumeration_summary summary;
    for ( int k = 0; k <= spec.max_slots; ++k ) {
        auto shapes = spec.shapes == shape_policy::all_trees ? all_shapes( k ) : std::vector< tree_ptr >{ right_comb( k ) };
        slot_summary s;
        s.slots = k;
        s.shapes = shapes.size();

        const auto leaf_count = static_cast< std::size_t >( k + 1 );
        std::size_t fillings = 1;
        for ( std::size_t i = 0; i < leaf_count; ++i )
            fillings *= static_cast< std::size_t >( n );
        std::size_t tuples = std::size_t{ 1 } << ( 4 * k );
        s.candidates = shapes.size() * fillings * tuples;

        for ( const auto& shape : shapes ) {
            for ( std::size_t fill = 0; fill < fillings; ++fill ) {
                std::vector< int > leaves( leaf_count );
                for ( std::size_t i = leaf_count, rest = fill; i-- > 0; rest /= static_cast< std::size_t >( n ) )
                    leaves[ i ] = static_cast< int >( rest % static_cast< std::size_t >( n ) );
                std::vector< unsigned > leaf_masks;
                for ( int v : leaves )
                    leaf_masks.push_back( var_masks[ static_cast< std::size_t >( v ) ] );

                std::uint64_t count = 0;
                for ( auto [ m, c ] : shape_counter{ alg, leaf_masks }.count( *shape ) )
                    if ( m == alg.rows_mask )
                        count = c;
                s.tautologies += count;
                if ( restricted_growth( leaves ) )
                    s.distinct_up_to_renaming += count;

                if ( count == 0 || !emit || summary.emitted >= spec.emit_limit )
                    continue;

                std::vector< std::string > leaf_names;
                for ( int v : leaves )
                    leaf_names.push_back( names[ static_cast< std::size_t >( v ) ] );
                std::vector< connective > slots( static_cast< std::size_t >( k ), by_column.front() );
                for ( std::size_t t = 0; t < tuples && summary.emitted < spec.emit_limit; ++t ) {
                    for ( std::size_t i = slots.size(), rest = t; i-- > 0; rest >>= 4 )
                        slots[ i ] = by_column[ rest & 15u ];
                    std::size_t leaf = 0;
                    std::size_t slot = 0;
                    if ( evaluate( *shape, alg, leaf_masks, slots, leaf, slot ) != alg.rows_mask )
                        continue;
                    emit( { shape_filler{ leaf_names, slots }.build( *shape ), slots } );
                    ++summary.emitted;
                }
            }
        }
        summary.per_slots.push_back( s );
    }
    return summary;
}

} // namespace illation
