#include "illation/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

namespace
{

struct outcome
{
    int code;
    std::string out;
    std::string err;
};

outcome run( std::vector< std::string > args, std::string input = {}, bool utf8 = false )
{
    std::istringstream in( input );
    std::ostringstream out, err;
    int code = illation::cli::run( args, in, out, err, { utf8 } );
    return { code, out.str(), err.str() };
}

} // namespace

TEST_CASE( "check reports Peirce's law in peano-russell" )
{
    auto r = run( { "check", "--notation", "peano-russell", "((A > B) > A) > A" } );
    CHECK( r.code == 0 );
    CHECK( r.out == "tautology\n" );
}

TEST_CASE( "contingent verdicts exit 0 unless --status" )
{
    CHECK( run( { "check", "x -> y" } ).code == 0 );
    CHECK( run( { "check", "--status", "x -> y" } ).code == 1 );
    CHECK( run( { "check", "--status", "x -> x" } ).code == 0 );
}

TEST_CASE( "matrix fixture" )
{
    auto r = run( { "matrix", "implication", "--encoding", "ascii" } );
    CHECK( r.code == 0 );
    CHECK( r.out == "\tt\tf\nt\tt\tf\nf\tt\tt\n" );
}

TEST_CASE( "translate" )
{
    auto r = run( { "translate", "--from", "peano-russell", "--to", "peirce", "(x > y) . (y > z) > (x > z)" } );
    CHECK( r.code == 0 );
    CHECK( r.out == "((x -< y) * (y -< z)) -< (x -< z)\n" );
}

TEST_CASE( "encoding default follows the environment" )
{
    CHECK( run( { "--notation", "peirce", "parse", "x -< y" } ).out.starts_with( "x -< y\n" ) );
    CHECK( run( { "--notation", "peirce", "parse", "x -< y" }, {}, true ).out.starts_with( "x ≺ y\n" ) );
    CHECK( illation::cli::locale_declares_utf8( nullptr, nullptr, "en_US.UTF-8" ) );
    CHECK( illation::cli::locale_declares_utf8( "", "C.utf8", "C" ) );
    CHECK_FALSE( illation::cli::locale_declares_utf8( "C", nullptr, "en_US.UTF-8" ) );
    CHECK_FALSE( illation::cli::locale_declares_utf8( nullptr, nullptr, nullptr ) );
}

TEST_CASE( "formula from standard input" )
{
    auto r = run( { "check", "-" }, "x | !x\n" );
    CHECK( r.code == 0 );
    CHECK( r.out == "tautology\n" );
}

TEST_CASE( "exit codes" )
{
    CHECK( run( { "parse", "x ->" } ).code == 2 );
    CHECK( run( { "bogus" } ).code == 2 );
    CHECK( run( {} ).code == 2 );
    CHECK( run( { "check" } ).code == 2 );
    CHECK( run( { "triadic", "eval", "x -> y", "--assign", "x=V,y=L" } ).code == 3 );
    CHECK( run( { "syllogism", "render", "I", "--format", "json" } ).code == 0 );
    CHECK( run( { "table", "--limit", "1", "x & y" } ).code == 4 );
    CHECK( run( { "connectives", "enumerate", "--vars", "4" } ).code == 2 );
    CHECK( run( { "matrix", "nonsense" } ).code == 2 );
    CHECK( run( { "triadic", "eval", "x", "--assign", "x=Q" } ).code == 2 );
    CHECK( run( { "--help" } ).code == 0 );
}

TEST_CASE( "diagnostics go to stderr" )
{
    auto r = run( { "--notation", "peirce", "parse", "x > y" } );
    CHECK( r.code == 2 );
    CHECK( r.out.empty() );
    CHECK( r.err.find( "peano-russell" ) != std::string::npos );
}

TEST_CASE( "f-first conditions" )
{
    auto r = run( { "--notation", "peirce", "--row-order", "f-first", "table", "--conditions", "x -< y" } );
    CHECK( r.out == "x -< y\nis true when:\n  x = f, y = f\n  x = f, y = v\n  x = v, y = v\nis false when:\n  x = v, y = f\n" );
}

TEST_CASE( "json and text agree" )
{
    using nlohmann::json;
    for ( const char* f : { "x -> y", "x | !x", "x & !x", "((A -> B) -> A) -> A" } ) {
        auto text = run( { "check", f } ).out;
        auto j = json::parse( run( { "check", "--format", "json", f } ).out );
        CHECK( text.starts_with( j[ "verdict" ].get< std::string >() + "\n" ) );

        auto itext = run( { "indirect", f } ).out;
        auto ij = json::parse( run( { "indirect", "--format", "json", f } ).out );
        CHECK( itext.starts_with( ij[ "outcome" ].get< std::string >() + "\n" ) );
        auto trace = itext.substr( itext.find( "\n\n" ) + 2 );
        CHECK( ij[ "steps" ].size() + 1 == static_cast< std::size_t >( std::count( trace.begin(), trace.end(), '\n' ) ) );
    }

    auto t = json::parse( run( { "--format", "json", "table", "x -> y" } ).out );
    CHECK( t[ "rows" ].size() == 4 );
    CHECK( t[ "rows" ][ 1 ][ "value" ] == "f" );
    CHECK( t[ "rows" ][ 1 ][ "assignment" ][ "x" ] == "t" );

    auto m = json::parse( run( { "--format", "json", "matrix", "implication" } ).out );
    CHECK( m[ "cells" ] == json::parse( R"([["t","f"],["t","t"]])" ) );
    CHECK( m[ "connective" ][ "column" ] == 13 );

    auto e = json::parse( run( { "--format", "json", "entails", "a -> b", "a" } ).out );
    CHECK( e[ "valid" ] == false );
    CHECK( e[ "counterexample" ] == json::parse( R"({"a":"f","b":"f"})" ) );
}

TEST_CASE( "output is reproducible" )
{
    std::vector< std::string > args{ "--format", "json", "connectives", "enumerate", "--vars", "2", "--slots", "2" };
    CHECK( run( args ).out == run( args ).out );
    CHECK( run( { "indirect", "((a -> b) -> c) -> d" } ).out == run( { "indirect", "((a -> b) -> c) -> d" } ).out );
}

TEST_CASE( "connectives commands" )
{
    CHECK( run( { "connectives", "identify", "vffv" } ).out == "equivalence (column 8)\n" );
    CHECK( run( { "connectives", "identify", "t,t,t,f" } ).out == "disjunction (column 15)\n" );
    CHECK( run( { "connectives", "xframe", "constant-true" } ).out ==
           "constant-true (column 16)\n ___ \n|   |\n|___|\nclosed: none\n" );
    auto table = run( { "connectives", "paper-table" } ).out;
    CHECK( table.find( "duplicates column 2" ) != std::string::npos );
    CHECK( run( { "connectives", "catalog" } ).out.find( "equivalence" ) != std::string::npos );
}

TEST_CASE( "triadic commands" )
{
    CHECK( run( { "triadic", "eval", "x | !x", "--assign", "x=L" } ).out == "L\n" );
    auto r = run( { "triadic", "check-restriction" } );
    CHECK( r.out == "cells checked: 10\nmismatches: 0\n" );
    auto t = run( { "triadic", "table", "x | !x", "--designated", "VL" } ).out;
    CHECK( t.find( "designated {VL} in every row: yes" ) != std::string::npos );
}

TEST_CASE( "syllogism commands" )
{
    CHECK( run( { "--notation", "peirce", "syllogism", "render", "O" } ).out == "?a -< -b\n" );
    auto b = run( { "--notation", "peano-russell", "--encoding", "unicode", "syllogism", "barbara" } ).out;
    CHECK( b.find( "(x ⊃ y) · (y ⊃ z) ⊃ (x ⊃ z)  tautology" ) != std::string::npos );
}

TEST_CASE( "--json is shorthand for --format json" )
{
    CHECK( run( { "indirect", "--json", "x -> y" } ).out == run( { "indirect", "--format", "json", "x -> y" } ).out );
    CHECK( run( { "--json", "--format", "text", "check", "x" } ).code == 2 );
}
