#include "illation/cli.hpp"

#include "illation/atlas.hpp"
#include "illation/bivalent.hpp"
#include "illation/indirect.hpp"
#include "illation/notation.hpp"
#include "illation/syllogistic.hpp"
#include "illation/triadic.hpp"
#include "support.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace illation::cli
{

namespace
{

using json = nlohmann::json;

enum class output_format { text, json };

class usage_failure : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct global_options
{
    std::string notation = "modern";
    std::string encoding;
    std::string format = "text";
    std::string row_order = "t-first";
};

struct resolved
{
    syntax_config syntax;
    output_format format;
    illation::row_order order;
};

resolved resolve( const global_options& g, const environment& env )
{
    resolved r{};
    auto n = parse_notation( g.notation );
    if ( !n )
        throw usage_failure( "unknown notation '" + g.notation + "'" );
    r.syntax.notation = *n;
    if ( g.encoding.empty() )
        r.syntax.encoding = env.utf8 ? text_encoding::unicode : text_encoding::ascii;
    else if ( auto e = parse_encoding( g.encoding ) )
        r.syntax.encoding = *e;
    else
        throw usage_failure( "unknown encoding '" + g.encoding + "'" );
    r.format = g.format == "json" ? output_format::json : output_format::text;
    r.order = g.row_order == "f-first" ? row_order::f_first : row_order::t_first;
    return r;
}

std::string truth_text( truth v ) { return std::string( 1, glyph( v ) ); }
std::string triad_text( triad v ) { return std::string( 1, glyph( v ) ); }

json to_json( const assignment2& a )
{
    json j = json::object();
    for ( const auto& [ name, value ] : a )
        j[ name.str() ] = truth_text( value );
    return j;
}

json to_json( const std::optional< assignment2 >& a ) { return a ? to_json( *a ) : json( nullptr ); }

json tree_json( const formula& f )
{
    return std::visit( detail::overloaded{
                           []( const constant_node& c ) {
                               return json{ { "type", "constant" }, { "value", truth_text( c.value ) } };
                           },
                           []( const variable_node& v ) { return json{ { "type", "variable" }, { "name", v.name.str() } }; },
                           []( const negation_node& n ) {
                               return json{ { "type", "negation" }, { "operand", tree_json( n.operand ) } };
                           },
                           []( const binary_node& b ) {
                               return json{ { "type", "binary" },
                                            { "connective", std::string( b.op.name() ) },
                                            { "left", tree_json( b.left ) },
                                            { "right", tree_json( b.right ) } };
                           },
                       },
                       f.get() );
}

json names_json( const std::vector< variable_name >& names )
{
    json j = json::array();
    for ( const auto& n : names )
        j.push_back( n.str() );
    return j;
}

std::string names_text( const std::vector< variable_name >& names )
{
    std::vector< std::string > parts;
    for ( const auto& n : names )
        parts.push_back( n.str() );
    return detail::join( parts, ", " );
}

std::string vector_text( connective c )
{
    std::string s;
    for ( auto v : c.vector() )
        s += glyph( v );
    return s;
}

json connective_json( connective c )
{
    json closed = json::array();
    static const std::array< std::string_view, 4 > labels{ "tt", "tf", "ft", "ff" };
    auto frame = xframe_of( c );
    for ( std::size_t i = 0; i < 4; ++i )
        if ( frame.closed[ i ] )
            closed.push_back( labels[ i ] );
    const auto& e = catalog_entry_of( c );
    return json{ { "column", e.column },
                 { "name", std::string( e.name ) },
                 { "vector", vector_text( c ) },
                 { "closed", closed },
                 { "provenance", std::string( e.provenance ) } };
}

void emit_json( std::ostream& out, const json& j ) { out << j.dump( 2 ) << "\n"; }

// Formula source: positional text, "-" for standard input, or --file.
struct formula_source
{
    std::string text;
    std::string file;
};

std::string read_source( const formula_source& src, std::istream& in )
{
    if ( !src.file.empty() ) {
        std::ifstream f( src.file );
        if ( !f )
            throw usage_failure( "cannot read file '" + src.file + "'" );
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
    if ( src.text == "-" ) {
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    if ( src.text.empty() )
        throw usage_failure( "no formula given (pass it as an argument, '-' for standard input, or --file)" );
    return src.text;
}

void add_formula_input( CLI::App* cmd, formula_source& src )
{
    cmd->add_option( "formula", src.text, "Formula text, or '-' to read standard input" );
    cmd->add_option( "--file", src.file, "Read the formula from a file" );
}

assignment3 parse_triadic_assignment( const std::vector< std::string >& items )
{
    assignment3 a;
    for ( const auto& item : items ) {
        auto eq = item.find( '=' );
        if ( eq == std::string::npos || eq + 2 != item.size() )
            throw usage_failure( "assignment '" + item + "' must look like x=V, x=L or x=F" );
        char v = static_cast< char >( std::toupper( static_cast< unsigned char >( item.back() ) ) );
        triad value = v == 'V' ? triad::V : v == 'L' ? triad::L : v == 'F' ? triad::F : throw usage_failure(
            "value in '" + item + "' must be V, L or F" );
        a.insert_or_assign( variable_name{ item.substr( 0, eq ) }, value );
    }
    return a;
}

truth_vector parse_values( std::string text )
{
    std::erase_if( text, []( char c ) { return c == ',' || c == ' ' || c == '/'; } );
    if ( text.size() != 4 )
        throw usage_failure( "expected four truth values in input order tt, tf, ft, ff (e.g. vffv or t,f,f,t)" );
    truth_vector v{};
    for ( std::size_t i = 0; i < 4; ++i ) {
        char c = static_cast< char >( std::tolower( static_cast< unsigned char >( text[ i ] ) ) );
        if ( c == 't' || c == 'v' || c == '1' )
            v[ i ] = truth::t;
        else if ( c == 'f' || c == '0' )
            v[ i ] = truth::f;
        else
            throw usage_failure( "'" + std::string( 1, text[ i ] ) + "' is not a truth value" );
    }
    return v;
}

connective parse_connective_arg( const std::string& key )
{
    try {
        return connective_by_key( key );
    }
    catch ( const std::invalid_argument& e ) {
        throw usage_failure( e.what() );
    }
}

} // namespace

bool locale_declares_utf8( const char* lc_all, const char* lc_ctype, const char* lang )
{
    // The first variable that is set and nonempty decides, as in POSIX.
    for ( const char* v : { lc_all, lc_ctype, lang } ) {
        if ( !v || !*v )
            continue;
        std::string s( v );
        std::transform( s.begin(), s.end(), s.begin(), []( unsigned char c ) { return std::tolower( c ); } );
        return s.find( "utf-8" ) != std::string::npos || s.find( "utf8" ) != std::string::npos;
    }
    return false;
}

int run( const std::vector< std::string >& args, std::istream& in, std::ostream& out, std::ostream& err,
         environment env )
{
    CLI::App app{ "Propositional logic in Peirce's notations: tables, icons, triadic matrices and the sixteen "
                  "connectives",
                  "illation" };
    app.require_subcommand( 1 );

    global_options g;
    app.add_option( "--notation", g.notation, "peirce, schroeder, peano-russell or modern" )
        ->check( CLI::IsMember( { "peirce", "schroeder", "peano-russell", "modern" } ) );
    app.add_option( "--encoding", g.encoding, "unicode or ascii (default: unicode if the locale is UTF-8)" )
        ->check( CLI::IsMember( { "unicode", "ascii" } ) );
    auto* format_opt =
        app.add_option( "--format", g.format, "text or json" )->check( CLI::IsMember( { "text", "json" } ) );
    bool json_flag = false;
    app.add_flag( "--json", json_flag, "Shorthand for --format json" )->excludes( format_opt );
    app.add_option( "--row-order", g.row_order, "t-first or f-first" )
        ->check( CLI::IsMember( { "t-first", "f-first" } ) );

    auto sub = [ & ]( CLI::App* parent, const std::string& name, const std::string& help ) {
        auto* s = parent->add_subcommand( name, help );
        s->fallthrough();
        return s;
    };

    formula_source src;

    auto* parse_cmd = sub( &app, "parse", "Parse a formula and show its structure" );
    add_formula_input( parse_cmd, src );

    auto* translate_cmd = sub( &app, "translate", "Rewrite a formula from one notation into another" );
    std::string from_notation = "modern";
    std::string to_notation = "modern";
    translate_cmd->add_option( "--from", from_notation, "Source notation" )->required();
    translate_cmd->add_option( "--to", to_notation, "Target notation" )->required();
    add_formula_input( translate_cmd, src );

    std::size_t limit = default_variable_limit;

    auto* table_cmd = sub( &app, "table", "Direct truth table" );
    bool conditions = false;
    add_formula_input( table_cmd, src );
    table_cmd->add_flag( "--conditions", conditions, "List the rows as 'is true when / is false when'" );
    table_cmd->add_option( "--limit", limit, "Variable limit" );

    auto* matrix_cmd = sub( &app, "matrix", "2x2 matrix of a binary connective" );
    std::string connective_key;
    matrix_cmd->add_option( "connective", connective_key, "Name, column 1..16, or vector such as tftt" )->required();

    auto* check_cmd = sub( &app, "check", "Classify a formula as tautology, contradiction or contingent" );
    bool status = false;
    add_formula_input( check_cmd, src );
    check_cmd->add_flag( "--status", status, "Exit 1 unless the formula is a tautology" );
    check_cmd->add_option( "--limit", limit, "Variable limit" );

    auto* entails_cmd = sub( &app, "entails", "Semantic entailment: premises... conclusion" );
    std::vector< std::string > entail_args;
    entails_cmd->add_option( "formulas", entail_args, "Premises followed by the conclusion" )->required();
    entails_cmd->add_option( "--limit", limit, "Variable limit" );

    auto* indirect_cmd = sub( &app, "indirect", "Indirect (abbreviated) truth table" );
    add_formula_input( indirect_cmd, src );

    auto* triadic_cmd = sub( &app, "triadic", "Three-valued matrices over V, L, F" );
    triadic_cmd->require_subcommand( 1 );
    auto* triadic_tables_cmd = sub( triadic_cmd, "tables", "Print the negation, ⊕ and Z\u0332 matrices" );
    auto* triadic_eval_cmd = sub( triadic_cmd, "eval", "Evaluate under a three-valued assignment" );
    std::vector< std::string > assign_items;
    add_formula_input( triadic_eval_cmd, src );
    triadic_eval_cmd->add_option( "--assign", assign_items, "x=V, y=L, ..." )->delimiter( ',' );
    auto* triadic_table_cmd = sub( triadic_cmd, "table", "Three-valued table (3^n rows)" );
    std::string designated = "V";
    add_formula_input( triadic_table_cmd, src );
    triadic_table_cmd->add_option( "--designated", designated, "Designated values for the tautology line (e.g. VL)" );
    auto* triadic_restriction_cmd =
        sub( triadic_cmd, "check-restriction", "Compare the matrices restricted to V, F with the bivalent ones" );

    auto* connectives_cmd = sub( &app, "connectives", "The sixteen binary connectives" );
    connectives_cmd->require_subcommand( 1 );
    auto* catalog_cmd = sub( connectives_cmd, "catalog", "List all sixteen with column, vector and X-frame" );
    auto* paper_table_cmd = sub( connectives_cmd, "paper-table", "The printed 4x16 grid with annotations" );
    auto* identify_cmd = sub( connectives_cmd, "identify", "Name the connective with the given four values" );
    std::string values_text;
    identify_cmd->add_option( "values", values_text, "Four values in order tt, tf, ft, ff, e.g. vffv" )->required();
    auto* xframe_cmd = sub( connectives_cmd, "xframe", "Draw a connective's X-frame" );
    xframe_cmd->add_option( "connective", connective_key, "Name, column 1..16, or vector" )->required();
    auto* enumerate_cmd = sub( connectives_cmd, "enumerate", "Enumerate tautologies over connective slots" );
    enumeration_spec spec;
    bool count_only = false;
    std::string shapes = "right-combs";
    enumerate_cmd->add_option( "--vars", spec.max_variables, "Variables p, q, r to draw leaves from (1..3)" );
    enumerate_cmd->add_option( "--slots", spec.max_slots, "Maximum binary connective slots (0..5)" );
    enumerate_cmd->add_option( "--limit", spec.emit_limit, "Maximum tautologies to list" );
    enumerate_cmd->add_option( "--shapes", shapes, "right-combs or all-trees" )
        ->check( CLI::IsMember( { "right-combs", "all-trees" } ) );
    enumerate_cmd->add_flag( "--count-only", count_only, "Print only the summary" );

    auto* syllogism_cmd = sub( &app, "syllogism", "Categorical forms and Barbara" );
    syllogism_cmd->require_subcommand( 1 );
    auto* render_cmd = sub( syllogism_cmd, "render", "Render a categorical form" );
    std::string figure_text;
    std::string subject = "a";
    std::string predicate = "b";
    render_cmd->add_option( "figure", figure_text, "A, E, I or O" )->required();
    render_cmd->add_option( "subject", subject, "Subject term (default a)" );
    render_cmd->add_option( "predicate", predicate, "Predicate term (default b)" );
    auto* barbara_cmd = sub( syllogism_cmd, "barbara", "Barbara as nested and conjunctive implications" );
    std::vector< std::string > terms{ "x", "y", "z" };
    barbara_cmd->add_option( "terms", terms, "Three term variables (default x y z)" )->expected( 3 );
    auto* aeio_cmd = sub( syllogism_cmd, "aeio-table", "The A/E/I/O scheme with glosses" );

    try {
        std::vector< std::string > reversed( args.rbegin(), args.rend() );
        app.parse( reversed );
    }
    catch ( const CLI::CallForHelp& e ) {
        return app.exit( e, out, err );
    }
    catch ( const CLI::CallForAllHelp& e ) {
        return app.exit( e, out, err );
    }
    catch ( const CLI::ParseError& e ) {
        app.exit( e, out, err );
        return usage_error;
    }

    try {
        if ( json_flag )
            g.format = "json";
        const auto r = resolve( g, env );
        const auto cfg = r.syntax;
        const bool as_json = r.format == output_format::json;

        if ( parse_cmd->parsed() ) {
            auto f = parse( read_source( src, in ), cfg );
            if ( as_json )
                emit_json( out, { { "formula", render( f, cfg ) },
                                  { "tree", tree_json( f ) },
                                  { "variables", names_json( variables_of( f ) ) } } );
            else
                out << render( f, cfg ) << "\n" << to_sexpr( f ) << "\n";
        }
        else if ( translate_cmd->parsed() ) {
            auto from = parse_notation( from_notation );
            auto to = parse_notation( to_notation );
            if ( !from || !to )
                throw usage_failure( "unknown notation in --from/--to" );
            auto text = read_source( src, in );
            auto result = translate( text, { *from, cfg.encoding }, { *to, cfg.encoding } );
            if ( as_json )
                emit_json( out, { { "input", text },
                                  { "from", from_notation },
                                  { "to", to_notation },
                                  { "encoding", std::string( to_string( cfg.encoding ) ) },
                                  { "output", result } } );
            else
                out << result << "\n";
        }
        else if ( table_cmd->parsed() ) {
            auto f = parse( read_source( src, in ), cfg );
            auto table = make_truth_table( f, limit );
            if ( as_json ) {
                json rows = json::array();
                for ( std::size_t k = 0; k < table.rows.size(); ++k ) {
                    auto i = r.order == row_order::t_first ? k : table.rows.size() - 1 - k;
                    rows.push_back( { { "assignment", to_json( table.rows[ i ].assignment ) },
                                      { "value", truth_text( table.rows[ i ].value ) } } );
                }
                emit_json( out, { { "formula", render( f, cfg ) },
                                  { "variables", names_json( table.variables ) },
                                  { "row_order", g.row_order },
                                  { "rows", rows } } );
            }
            else if ( conditions )
                out << render_truth_conditions( table, f, cfg, r.order );
            else
                out << render_truth_table( table, f, cfg, r.order );
        }
        else if ( matrix_cmd->parsed() ) {
            auto m = make_matrix_table( parse_connective_arg( connective_key ) );
            if ( as_json ) {
                json cells = json::array();
                for ( const auto& row : m.cells )
                    cells.push_back( { truth_text( row[ 0 ] ), truth_text( row[ 1 ] ) } );
                emit_json( out, { { "connective", connective_json( m.id ) },
                                  { "rows", { "t", "f" } },
                                  { "columns", { "t", "f" } },
                                  { "cells", cells } } );
            }
            else
                out << render_matrix( m, cfg.notation );
        }
        else if ( check_cmd->parsed() ) {
            auto f = parse( read_source( src, in ), cfg );
            auto v = classify( f, limit );
            if ( as_json )
                emit_json( out, { { "formula", render( f, cfg ) },
                                  { "verdict", std::string( to_string( v.kind ) ) },
                                  { "falsifying", to_json( v.falsifying ) },
                                  { "satisfying", to_json( v.satisfying ) } } );
            else {
                out << to_string( v.kind ) << "\n";
                if ( v.kind != verdict_class::tautology && v.falsifying )
                    out << "falsified by: " << render_assignment( *v.falsifying, cfg.notation ) << "\n";
                if ( v.kind != verdict_class::contradiction && v.kind != verdict_class::tautology && v.satisfying )
                    out << "satisfied by: " << render_assignment( *v.satisfying, cfg.notation ) << "\n";
            }
            if ( status && v.kind != verdict_class::tautology )
                return not_tautology;
        }
        else if ( entails_cmd->parsed() ) {
            std::vector< formula > premises;
            for ( std::size_t i = 0; i + 1 < entail_args.size(); ++i )
                premises.push_back( parse( entail_args[ i ], cfg ) );
            auto conclusion = parse( entail_args.back(), cfg );
            auto e = entails( premises, conclusion, limit );
            if ( as_json )
                emit_json( out, { { "valid", e.valid }, { "counterexample", to_json( e.counterexample ) } } );
            else {
                out << ( e.valid ? "valid" : "invalid" ) << "\n";
                if ( e.counterexample )
                    out << "counterexample: " << render_assignment( *e.counterexample, cfg.notation ) << "\n";
            }
        }
        else if ( indirect_cmd->parsed() ) {
            auto f = parse( read_source( src, in ), cfg );
            auto result = indirect_check( f );
            if ( as_json ) {
                json columns = json::array();
                for ( const auto& c : result.trace.columns )
                    columns.push_back( render( c, cfg ) );
                json steps = json::array();
                for ( const auto& s : result.trace.steps ) {
                    json values = json::array();
                    for ( const auto& v : s.values )
                        values.push_back( v ? truth_text( *v ) : "-" );
                    json assumed = json::array();
                    for ( const auto& a : s.assumed )
                        assumed.push_back( { { "column", a.column }, { "value", truth_text( a.value ) } } );
                    steps.push_back( { { "note", std::string( to_string( s.note ) ) },
                                       { "parent", s.parent ? json( *s.parent ) : json( nullptr ) },
                                       { "source", s.source },
                                       { "values", values },
                                       { "assumed", assumed },
                                       { "conflict", s.conflict ? json( *s.conflict ) : json( nullptr ) } } );
                }
                emit_json( out, { { "formula", render( f, cfg ) },
                                  { "outcome", std::string( to_string( result.outcome ) ) },
                                  { "countermodel", to_json( result.countermodel ) },
                                  { "unconstrained", names_json( result.unconstrained ) },
                                  { "columns", columns },
                                  { "steps", steps } } );
            }
            else {
                out << to_string( result.outcome ) << "\n";
                if ( result.countermodel ) {
                    out << "countermodel: " << render_assignment( *result.countermodel, cfg.notation ) << "\n";
                    if ( !result.unconstrained.empty() )
                        out << "unconstrained: " << names_text( result.unconstrained ) << "\n";
                }
                out << "\n" << render_trace( result.trace, cfg );
            }
        }
        else if ( triadic_tables_cmd->parsed() ) {
            if ( as_json ) {
                const auto& t = peirce_triadic_tables();
                json negation = json::object();
                for ( auto v : all_triads )
                    negation[ triad_text( v ) ] = triad_text( t.negation[ triad_index( v ) ] );
                auto square = []( const auto& m ) {
                    json rows = json::array();
                    for ( const auto& row : m ) {
                        json cells = json::array();
                        for ( auto v : row )
                            cells.push_back( triad_text( v ) );
                        rows.push_back( cells );
                    }
                    return rows;
                };
                emit_json( out, { { "order", { "V", "L", "F" } },
                                  { "negation", negation },
                                  { "oplus", square( t.oplus ) },
                                  { "zconj", square( t.zconj ) } } );
            }
            else
                out << render_triadic_negation( cfg.encoding ) << "\n"
                    << render_triadic_oplus( cfg.encoding ) << "\n"
                    << render_triadic_zconj( cfg.encoding );
        }
        else if ( triadic_eval_cmd->parsed() ) {
            auto f = parse( read_source( src, in ), cfg );
            auto value = eval3( f, parse_triadic_assignment( assign_items ) );
            if ( as_json )
                emit_json( out, { { "formula", render( f, cfg ) }, { "value", triad_text( value ) } } );
            else
                out << glyph( value ) << "\n";
        }
        else if ( triadic_table_cmd->parsed() ) {
            auto f = parse( read_source( src, in ), cfg );
            auto table = make_triadic_table( f );
            std::set< triad > designated_set;
            for ( char c : designated ) {
                c = static_cast< char >( std::toupper( static_cast< unsigned char >( c ) ) );
                if ( c == 'V' )
                    designated_set.insert( triad::V );
                else if ( c == 'L' )
                    designated_set.insert( triad::L );
                else if ( c == 'F' )
                    designated_set.insert( triad::F );
                else
                    throw usage_failure( "designated values must be drawn from V, L, F" );
            }
            bool holds = designated_tautology( f, designated_set );
            if ( as_json ) {
                json rows = json::array();
                for ( const auto& row : table.rows ) {
                    json a = json::object();
                    for ( const auto& [ name, value ] : row.assignment )
                        a[ name.str() ] = triad_text( value );
                    rows.push_back( { { "assignment", a }, { "value", triad_text( row.value ) } } );
                }
                emit_json( out, { { "formula", render( f, cfg ) },
                                  { "variables", names_json( table.variables ) },
                                  { "rows", rows },
                                  { "designated", designated },
                                  { "designated_tautology", holds } } );
            }
            else
                out << render_triadic_table( table, f, cfg ) << "designated {" << designated << "} in every row: "
                    << ( holds ? "yes" : "no" ) << "\n";
        }
        else if ( triadic_restriction_cmd->parsed() ) {
            auto report = restriction_check();
            if ( as_json ) {
                json mismatches = json::array();
                for ( const auto& m : report.mismatches )
                    mismatches.push_back( { { "table", m.table },
                                            { "left", triad_text( m.left ) },
                                            { "right", triad_text( m.right ) },
                                            { "triadic", triad_text( m.triadic_value ) },
                                            { "bivalent", truth_text( m.bivalent_value ) } } );
                emit_json( out, { { "cells_checked", report.cells_checked },
                                  { "mismatches", mismatches },
                                  { "passed", report.passed() } } );
            }
            else {
                out << "cells checked: " << report.cells_checked << "\n";
                out << "mismatches: " << report.mismatches.size() << "\n";
                for ( const auto& m : report.mismatches )
                    out << "  " << m.table << " " << glyph( m.left ) << " " << glyph( m.right ) << ": "
                        << glyph( m.triadic_value ) << " vs " << glyph( m.bivalent_value ) << "\n";
            }
        }
        else if ( catalog_cmd->parsed() ) {
            if ( as_json ) {
                json list = json::array();
                for ( const auto& e : catalog() )
                    list.push_back( connective_json( e.id ) );
                emit_json( out, list );
            }
            else
                out << render_catalog();
        }
        else if ( paper_table_cmd->parsed() ) {
            const auto& grid = paper_table();
            if ( as_json ) {
                json columns = json::array();
                for ( int c = 1; c <= 16; ++c ) {
                    std::string col;
                    for ( auto v : grid.column( c ) )
                        col += v == truth::t ? 'T' : 'F';
                    columns.push_back( col );
                }
                emit_json( out, { { "columns", columns }, { "annotations", grid.annotations } } );
            }
            else
                out << render_paper_table( grid );
        }
        else if ( identify_cmd->parsed() ) {
            auto c = identify( parse_values( values_text ) );
            if ( as_json )
                emit_json( out, connective_json( c ) );
            else
                out << c.name() << " (column " << c.peirce_column() << ")\n";
        }
        else if ( xframe_cmd->parsed() ) {
            auto c = parse_connective_arg( connective_key );
            auto frame = render_xframe( xframe_of( c ) );
            if ( as_json ) {
                auto j = connective_json( c );
                std::vector< std::string > lines;
                std::istringstream ss( frame );
                for ( std::string line; std::getline( ss, line ); )
                    lines.push_back( line );
                lines.pop_back();
                j[ "glyph" ] = lines;
                emit_json( out, j );
            }
            else
                out << c.name() << " (column " << c.peirce_column() << ")\n" << frame;
        }
        else if ( enumerate_cmd->parsed() ) {
            spec.shapes = shapes == "all-trees" ? shape_policy::all_trees : shape_policy::right_combs;
            json listed = json::array();
            std::vector< std::string > lines;
            auto sink = [ & ]( const enumerated_tautology& t ) {
                if ( as_json ) {
                    json slots = json::array();
                    for ( auto c : t.slots )
                        slots.push_back( std::string( c.name() ) );
                    listed.push_back( { { "formula", to_sexpr( t.f ) }, { "slots", slots } } );
                }
                else
                    lines.push_back( to_sexpr( t.f ) );
            };
            enumeration_summary summary;
            try {
                summary = count_only ? enumerate_tautologies( spec ) : enumerate_tautologies( spec, sink );
            }
            catch ( const std::invalid_argument& e ) {
                throw usage_failure( e.what() );
            }
            if ( as_json ) {
                json per = json::array();
                for ( const auto& s : summary.per_slots )
                    per.push_back( { { "slots", s.slots },
                                     { "shapes", s.shapes },
                                     { "candidates", s.candidates },
                                     { "tautologies", s.tautologies },
                                     { "distinct_up_to_renaming", s.distinct_up_to_renaming } } );
                json j{ { "vars", spec.max_variables },
                        { "max_slots", spec.max_slots },
                        { "shapes", shapes },
                        { "per_slots", per },
                        { "total_tautologies", summary.total_tautologies() },
                        { "total_distinct_up_to_renaming", summary.total_distinct() } };
                if ( !count_only )
                    j[ "tautologies" ] = listed;
                emit_json( out, j );
            }
            else {
                for ( const auto& l : lines )
                    out << l << "\n";
                if ( !lines.empty() )
                    out << "\n";
                out << "slots  shapes  candidates  tautologies  distinct-up-to-renaming\n";
                for ( const auto& s : summary.per_slots )
                    out << detail::pad_right( std::to_string( s.slots ), 7 )
                        << detail::pad_right( std::to_string( s.shapes ), 8 )
                        << detail::pad_right( std::to_string( s.candidates ), 12 )
                        << detail::pad_right( std::to_string( s.tautologies ), 13 ) << s.distinct_up_to_renaming
                        << "\n";
                out << "total tautologies: " << summary.total_tautologies()
                    << " (distinct up to renaming: " << summary.total_distinct() << ")\n";
            }
        }
        else if ( render_cmd->parsed() ) {
            auto fig = parse_figure( figure_text );
            if ( !fig )
                throw usage_failure( "figure must be one of A, E, I, O" );
            categorical_form form{ *fig, variable_name{ subject }, variable_name{ predicate } };
            auto text = render_categorical( form, cfg );
            if ( as_json ) {
                json j{ { "figure", std::string( 1, to_char( *fig ) ) }, { "text", text } };
                if ( *fig == figure::A || *fig == figure::E )
                    j[ "formula" ] = tree_json( as_formula( form ) );
                emit_json( out, j );
            }
            else
                out << text << "\n";
        }
        else if ( barbara_cmd->parsed() ) {
            auto forms = barbara( variable_name{ terms[ 0 ] }, variable_name{ terms[ 1 ] }, variable_name{ terms[ 2 ] } );
            if ( as_json )
                emit_json( out, { { "nested", render( forms.nested, cfg ) },
                                  { "nested_verdict", std::string( to_string( forms.nested_verdict.kind ) ) },
                                  { "conjunctive", render( forms.conjunctive, cfg ) },
                                  { "conjunctive_verdict", std::string( to_string( forms.conjunctive_verdict.kind ) ) } } );
            else
                out << "nested:      " << render( forms.nested, cfg ) << "  " << to_string( forms.nested_verdict.kind )
                    << "\n"
                    << "conjunctive: " << render( forms.conjunctive, cfg ) << "  "
                    << to_string( forms.conjunctive_verdict.kind ) << "\n";
        }
        else if ( aeio_cmd->parsed() ) {
            if ( as_json ) {
                json rows = json::array();
                for ( auto fig : { figure::A, figure::E, figure::I, figure::O } )
                    rows.push_back( { { "figure", std::string( 1, to_char( fig ) ) },
                                      { "text", render_categorical( { fig, variable_name{ "a" }, variable_name{ "b" } },
                                                                    cfg ) } } );
                emit_json( out, rows );
            }
            else
                out << render_aeio_table( cfg );
        }
        return success;
    }
    catch ( const parse_error& e ) {
        err << "parse error at offset " << e.position() << ": " << e.what();
        if ( !e.expected().empty() )
            err << " (expected " << detail::join( e.expected(), ", " ) << ")";
        err << "\n";
        return usage_error;
    }
    catch ( const unsupported_connective& e ) {
        err << "unsupported: " << e.what() << "\n";
        return unsupported;
    }
    catch ( const quantified_form& e ) {
        err << "unsupported: " << e.what() << "\n";
        return unsupported;
    }
    catch ( const limit_exceeded& e ) {
        err << "limit exceeded: " << e.what() << "\n";
        return resource_limit;
    }
    catch ( const unbound_variable& e ) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    catch ( const usage_failure& e ) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    catch ( const std::invalid_argument& e ) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
}

} // namespace illation::cli
