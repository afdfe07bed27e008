#include "illation/triadic.hpp"
#include "illation/bivalent.hpp"
#include "support.hpp"

#include <algorithm>

namespace illation
{

namespace
{

constexpr triad V = triad::V;
constexpr triad L = triad::L;
constexpr triad F = triad::F;

const triadic_tables tables{
    { F, L, V },
    { { { V, V, V }, { V, L, L }, { V, L, F } } },
    { { { V, L, F }, { L, L, F }, { F, F, F } } },
};

std::string render_square( std::string_view corner, const std::array< std::array< triad, 3 >, 3 >& m )
{
    std::string out( corner );
    for ( auto c : all_triads )
        out += std::string( "\t" ) + glyph( c );
    out += "\n";
    for ( auto r : all_triads ) {
        out += glyph( r );
        for ( auto c : all_triads )
            out += std::string( "\t" ) + glyph( m[ triad_index( r ) ][ triad_index( c ) ] );
        out += "\n";
    }
    return out;
}

assignment3 triadic_row_assignment( const std::vector< variable_name >& vars, std::size_t index )
{
    assignment3 a;
    for ( std::size_t i = vars.size(); i-- > 0; ) {
        a.emplace( vars[ i ], all_triads[ index % 3 ] );
        index /= 3;
    }
    return a;
}

} // namespace

const triadic_tables& peirce_triadic_tables() { return tables; }

triad triadic_not( triad v ) { return tables.negation[ triad_index( v ) ]; }
triad triadic_or( triad a, triad b ) { return tables.oplus[ triad_index( a ) ][ triad_index( b ) ]; }
triad triadic_and( triad a, triad b ) { return tables.zconj[ triad_index( a ) ][ triad_index( b ) ]; }

unsupported_connective::unsupported_connective( connective op )
    : std::runtime_error( "no triadic matrix for " + std::string( op.name() ) +
                          "; only negation, disjunction and conjunction have triadic tables" ),
      _op{ op }
{
}

triad eval3( const formula& f, const assignment3& a )
{
    return std::visit( detail::overloaded{
                           []( const constant_node& c ) { return to_triad( c.value ); },
                           [ & ]( const variable_node& v ) {
                               auto it = a.find( v.name );
                               if ( it == a.end() )
                                   throw unbound_variable( v.name );
                               return it->second;
                           },
                           [ & ]( const negation_node& n ) { return triadic_not( eval3( n.operand, a ) ); },
                           [ & ]( const binary_node& b ) {
                               if ( b.op == connectives::disjunction )
                                   return triadic_or( eval3( b.left, a ), eval3( b.right, a ) );
                               if ( b.op == connectives::conjunction )
                                   return triadic_and( eval3( b.left, a ), eval3( b.right, a ) );
                               throw unsupported_connective( b.op );
                           },
                       },
                       f.get() );
}

triadic_table make_triadic_table( const formula& f, std::size_t variable_limit )
{
    triadic_table table{ variables_of( f ), {} };
    if ( table.variables.size() > variable_limit )
        throw limit_exceeded( "formula has " + std::to_string( table.variables.size() ) +
                              " variables; the triadic table limit is " + std::to_string( variable_limit ) );
    std::size_t rows = 1;
    for ( std::size_t i = 0; i < table.variables.size(); ++i )
        rows *= 3;
    for ( std::size_t i = 0; i < rows; ++i ) {
        auto a = triadic_row_assignment( table.variables, i );
        auto value = eval3( f, a );
        table.rows.push_back( { std::move( a ), value } );
    }
    return table;
}

restriction_report restriction_check()
{
    restriction_report report;
    const std::array< triad, 2 > classical{ V, F };
    auto as_truth = []( triad v ) { return v == V ? truth::t : truth::f; };

    for ( auto x : classical ) {
        ++report.cells_checked;
        auto expected = !as_truth( x );
        if ( triadic_not( x ) != to_triad( expected ) )
            report.mismatches.push_back( { "negation", x, x, triadic_not( x ), expected } );
    }

    struct binary_case
    {
        std::string_view name;
        triad ( *triadic )( triad, triad );
        connective bivalent;
    };
    const std::array< binary_case, 2 > binaries{ {
        { "oplus", &triadic_or, connectives::disjunction },
        { "zconj", &triadic_and, connectives::conjunction },
    } };
    for ( const auto& b : binaries )
        for ( auto x : classical )
            for ( auto y : classical ) {
                ++report.cells_checked;
                auto got = b.triadic( x, y );
                auto expected = b.bivalent.apply( as_truth( x ), as_truth( y ) );
                if ( got != to_triad( expected ) )
                    report.mismatches.push_back( { std::string( b.name ), x, y, got, expected } );
            }
    return report;
}

bool designated_tautology( const formula& f, const std::set< triad >& designated )
{
    auto table = make_triadic_table( f );
    return std::all_of( table.rows.begin(), table.rows.end(),
                        [ & ]( const triadic_row& r ) { return designated.contains( r.value ); } );
}

std::string render_triadic_negation( text_encoding enc )
{
    std::string out = enc == text_encoding::unicode ? "x\tx\u0304\n" : "x\t-x\n";
    for ( auto v : all_triads )
        out += std::string( 1, glyph( v ) ) + "\t" + glyph( triadic_not( v ) ) + "\n";
    return out;
}

std::string render_triadic_oplus( text_encoding enc )
{
    return render_square( enc == text_encoding::unicode ? "⊕" : "(+)", tables.oplus );
}

std::string render_triadic_zconj( text_encoding enc )
{
    return render_square( enc == text_encoding::unicode ? "Z\u0332" : "Z_", tables.zconj );
}

std::string render_triadic_table( const triadic_table& table, const formula& f, syntax_config config )
{
    std::vector< std::string > names;
    std::vector< std::size_t > widths;
    for ( const auto& v : table.variables ) {
        names.push_back( v.str() );
        widths.push_back( detail::display_width( v.str() ) );
    }
    auto line = [ & ]( const std::vector< std::string >& cells, const std::string& last ) {
        std::string s;
        for ( std::size_t i = 0; i < cells.size(); ++i )
            s += detail::pad_right( cells[ i ], widths[ i ] ) + " ";
        return s + "| " + last + "\n";
    };
    std::string out = line( names, render( f, config ) );
    for ( const auto& row : table.rows ) {
        std::vector< std::string > cells;
        for ( const auto& v : table.variables )
            cells.emplace_back( 1, glyph( row.assignment.at( v ) ) );
        out += line( cells, std::string( 1, glyph( row.value ) ) );
    }
    return out;
}

} // namespace illation
