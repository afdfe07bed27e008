#include "illation/bivalent.hpp"
#include "support.hpp"

#include <algorithm>

namespace illation
{

namespace
{

// Assignment for row `index` of a table over `vars`: bit (n-1-i) of index set
// means variable i is f, so row 0 is all-t and the leftmost variable varies
// slowest.
assignment2 row_assignment( const std::vector< variable_name >& vars, std::uint64_t index )
{
    assignment2 a;
    const auto n = vars.size();
    for ( std::size_t i = 0; i < n; ++i )
        a.emplace( vars[ i ], to_truth( ( ( index >> ( n - 1 - i ) ) & 1u ) == 0 ) );
    return a;
}

void check_limit( std::size_t count, std::size_t limit )
{
    if ( count > limit )
        throw limit_exceeded( "formula has " + std::to_string( count ) + " variables; the direct table limit is " +
                              std::to_string( limit ) );
}

template < typename Visit >
void for_each_row( const std::vector< variable_name >& vars, Visit&& visit, bool f_first = false )
{
    const std::uint64_t rows = std::uint64_t{ 1 } << vars.size();
    for ( std::uint64_t i = 0; i < rows; ++i )
        if ( !visit( row_assignment( vars, f_first ? rows - 1 - i : i ) ) )
            return;
}

std::vector< std::size_t > display_order( std::size_t rows, row_order order )
{
    std::vector< std::size_t > idx( rows );
    for ( std::size_t i = 0; i < rows; ++i )
        idx[ i ] = order == row_order::t_first ? i : rows - 1 - i;
    return idx;
}

} // namespace

truth eval( const formula& f, const assignment2& a )
{
    return std::visit( detail::overloaded{
                           []( const constant_node& c ) { return c.value; },
                           [ & ]( const variable_node& v ) {
                               auto it = a.find( v.name );
                               if ( it == a.end() )
                                   throw unbound_variable( v.name );
                               return it->second;
                           },
                           [ & ]( const negation_node& n ) { return !eval( n.operand, a ); },
                           [ & ]( const binary_node& b ) { return b.op.apply( eval( b.left, a ), eval( b.right, a ) ); },
                       },
                       f.get() );
}

truth_table make_truth_table( const formula& f, std::size_t variable_limit )
{
    truth_table table{ variables_of( f ), {} };
    check_limit( table.variables.size(), variable_limit );
    table.rows.reserve( std::size_t{ 1 } << table.variables.size() );
    for_each_row( table.variables, [ & ]( assignment2 a ) {
        auto value = eval( f, a );
        table.rows.push_back( { std::move( a ), value } );
        return true;
    } );
    return table;
}

matrix_table make_matrix_table( connective c )
{
    matrix_table m{ c, {} };
    for ( auto [ l, r ] : input_pairs )
        m.cells[ l == truth::t ? 0 : 1 ][ r == truth::t ? 0 : 1 ] = c.apply( l, r );
    return m;
}

std::string_view to_string( verdict_class v )
{
    switch ( v ) {
    case verdict_class::tautology: return "tautology";
    case verdict_class::contradiction: return "contradiction";
    case verdict_class::contingent: return "contingent";
    }
    return "?";
}

verdict classify( const formula& f, std::size_t variable_limit )
{
    auto vars = variables_of( f );
    check_limit( vars.size(), variable_limit );
    verdict v{ verdict_class::contingent, std::nullopt, std::nullopt };
    for_each_row( vars, [ & ]( assignment2 a ) {
        auto value = eval( f, a );
        auto& slot = value == truth::t ? v.satisfying : v.falsifying;
        if ( !slot )
            slot = std::move( a );
        return !( v.satisfying && v.falsifying );
    } );
    if ( !v.falsifying )
        v.kind = verdict_class::tautology;
    else if ( !v.satisfying )
        v.kind = verdict_class::contradiction;
    return v;
}

entailment entails( const std::vector< formula >& premises, const formula& conclusion, std::size_t variable_limit )
{
    std::vector< variable_name > vars;
    auto collect = [ & ]( const formula& f ) {
        for ( auto& v : variables_of( f ) )
            if ( std::find( vars.begin(), vars.end(), v ) == vars.end() )
                vars.push_back( std::move( v ) );
    };
    for ( const auto& p : premises )
        collect( p );
    collect( conclusion );
    check_limit( vars.size(), variable_limit );

    entailment result{ true, std::nullopt };
    for_each_row( vars, [ & ]( assignment2 a ) {
        bool premises_hold = std::all_of( premises.begin(), premises.end(),
                                          [ & ]( const formula& p ) { return eval( p, a ) == truth::t; } );
        if ( premises_hold && eval( conclusion, a ) == truth::f ) {
            result = { false, std::move( a ) };
            return false;
        }
        return true;
    }, true );
    return result;
}

std::string render_truth_table( const truth_table& table, const formula& f, syntax_config config, row_order order )
{
    std::vector< std::size_t > widths;
    std::vector< std::string > header;
    for ( const auto& v : table.variables ) {
        header.push_back( v.str() );
        widths.push_back( detail::display_width( v.str() ) );
    }

    auto line = [ & ]( const std::vector< std::string >& cells, std::string_view last ) {
        std::vector< std::string > padded;
        for ( std::size_t i = 0; i < cells.size(); ++i )
            padded.push_back( detail::pad_right( cells[ i ], widths[ i ] ) );
        std::string s = detail::join( padded, " " );
        if ( !s.empty() )
            s += ' ';
        s += "| ";
        s += last;
        return s + "\n";
    };

    std::string out = line( header, render( f, config ) );
    for ( auto i : display_order( table.rows.size(), order ) ) {
        const auto& row = table.rows[ i ];
        std::vector< std::string > cells;
        for ( const auto& v : table.variables )
            cells.emplace_back( value_glyph( row.assignment.at( v ), config.notation ) );
        out += line( cells, value_glyph( row.value, config.notation ) );
    }
    return out;
}

std::string render_assignment( const assignment2& a, notation_id n )
{
    std::vector< std::string > parts;
    for ( const auto& [ name, value ] : a )
        parts.push_back( name.str() + " = " + std::string( value_glyph( value, n ) ) );
    return detail::join( parts, ", " );
}

std::string render_truth_conditions( const truth_table& table, const formula& f, syntax_config config,
                                     row_order order )
{
    std::vector< std::string > when_true;
    std::vector< std::string > when_false;
    for ( auto i : display_order( table.rows.size(), order ) ) {
        const auto& row = table.rows[ i ];
        std::vector< std::string > parts;
        for ( const auto& v : table.variables )
            parts.push_back( v.str() + " = " + std::string( value_glyph( row.assignment.at( v ), config.notation ) ) );
        std::string clause = parts.empty() ? "always" : detail::join( parts, ", " );
        ( row.value == truth::t ? when_true : when_false ).push_back( std::move( clause ) );
    }

    std::string out = render( f, config ) + "\n";
    out += "is true when:\n";
    for ( const auto& c : when_true )
        out += "  " + c + "\n";
    out += "is false when:\n";
    for ( const auto& c : when_false )
        out += "  " + c + "\n";
    return out;
}

std::string render_matrix( const matrix_table& m, notation_id n )
{
    auto g = [ & ]( truth v ) { return std::string( value_glyph( v, n ) ); };
    std::string out = "\t" + g( truth::t ) + "\t" + g( truth::f ) + "\n";
    for ( int r = 0; r < 2; ++r ) {
        truth label = r == 0 ? truth::t : truth::f;
        out += g( label ) + "\t" + g( m.cells[ r ][ 0 ] ) + "\t" + g( m.cells[ r ][ 1 ] ) + "\n";
    }
    return out;
}

} // namespace illation
