#include "illation/bivalent.hpp"
#include "illation/notation.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace illation;

namespace
{

constexpr syntax_config peirce_ascii{ notation_id::peirce, text_encoding::ascii };
constexpr syntax_config peirce_unicode{ notation_id::peirce, text_encoding::unicode };
constexpr syntax_config schroeder_unicode{ notation_id::schroeder, text_encoding::unicode };
constexpr syntax_config peano_ascii{ notation_id::peano_russell, text_encoding::ascii };
constexpr syntax_config peano_unicode{ notation_id::peano_russell, text_encoding::unicode };
constexpr syntax_config modern_ascii{ notation_id::modern, text_encoding::ascii };

formula peirce_law()
{
    auto a = var( "A" );
    return impl( impl( impl( a, var( "B" ) ), a ), a );
}

std::string unbracket( std::string s )
{
    for ( auto& c : s )
        if ( c == '[' || c == '{' )
            c = '(';
        else if ( c == ']' || c == '}' )
            c = ')';
    return s;
}

std::size_t error_position( std::string_view text, syntax_config config )
{
    try {
        (void)parse( text, config );
    }
    catch ( const parse_error& e ) {
        return e.position();
    }
    return std::string::npos;
}

std::string error_message( std::string_view text, syntax_config config )
{
    try {
        (void)parse( text, config );
    }
    catch ( const parse_error& e ) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE( "implication is right-associative" )
{
    CHECK( parse( "x -< y -< z", peirce_ascii ) == impl( var( "x" ), impl( var( "y" ), var( "z" ) ) ) );
    CHECK( parse( "x -> y -> z", modern_ascii ) == impl( var( "x" ), impl( var( "y" ), var( "z" ) ) ) );
}

TEST_CASE( "precedence: negation, conjunction, disjunction, implication, equivalence" )
{
    auto x = var( "x" );
    auto y = var( "y" );
    auto z = var( "z" );
    CHECK( parse( "!x & y | z -> x <-> y", modern_ascii ) ==
           equiv( impl( disj( conj( neg( x ), y ), z ), x ), y ) );
    CHECK( parse( "x & y & z", modern_ascii ) == conj( conj( x, y ), z ) );
    CHECK( parse( "x | y | z", modern_ascii ) == disj( disj( x, y ), z ) );
    CHECK( parse( "x <-> y <-> z", modern_ascii ) == equiv( x, equiv( y, z ) ) );
}

TEST_CASE( "Peirce's law in peano-russell ascii" )
{
    CHECK( parse( "((A > B) > A) > A", peano_ascii ) == peirce_law() );
}

TEST_CASE( "single variable parses in every configuration" )
{
    for ( auto n : all_notations )
        for ( auto e : all_encodings )
            CHECK( parse( "a", { n, e } ) == var( "a" ) );
}

TEST_CASE( "rendering examples" )
{
    CHECK( render( peirce_law(), peirce_ascii ) == "((A -< B) -< A) -< A" );
    CHECK( render( neg( var( "a" ) ), peano_unicode ) == "∼a" );
    CHECK( render( neg( var( "a" ) ), schroeder_unicode ) == "a′" );
    CHECK( render( neg( var( "a" ) ), peirce_unicode ) == "a\u0304" );
    CHECK( render( neg( var( "a" ) ), peirce_ascii ) == "-a" );
}

TEST_CASE( "constants" )
{
    CHECK( parse( "f -< v", peirce_ascii ) == impl( formula::constant( truth::f ), formula::constant( truth::t ) ) );
    CHECK( parse( "0 =< 1", { notation_id::schroeder, text_encoding::ascii } ) ==
           impl( formula::constant( truth::f ), formula::constant( truth::t ) ) );
    CHECK( parse( "⊥ → ⊤", { notation_id::modern, text_encoding::unicode } ) ==
           impl( formula::constant( truth::f ), formula::constant( truth::t ) ) );
    CHECK( render( formula::constant( truth::t ), peirce_unicode ) == "v" );
}

TEST_CASE( "the three-notation display" )
{
    auto a = var( "a" );
    auto c = var( "c" );
    auto f = impl( impl( impl( neg( c ), a ), impl( neg( a ), c ) ),
                   impl( impl( neg( c ), a ), impl( impl( c, a ), a ) ) );

    const std::string peano = "[(∼c ⊃ a) ⊃ (∼a ⊃ c)] ⊃ {(∼c ⊃ a) ⊃ [(c ⊃ a) ⊃ a]}";
    const std::string peirce = "[(c\u0304 ≺ a) ≺ (a\u0304 ≺ c)] ≺ {(c\u0304 ≺ a) ≺ [(c ≺ a) ≺ a]}";
    const std::string schroeder = "[(c′ ⋐ a) ⋐ (a′ ⋐ c)] ⋐ {(c′ ⋐ a) ⋐ [(c ⋐ a) ⋐ a]}";

    CHECK( parse( peano, peano_unicode ) == f );
    CHECK( parse( peirce, peirce_unicode ) == f );
    CHECK( parse( schroeder, schroeder_unicode ) == f );

    CHECK( render( f, peano_unicode ) == unbracket( peano ) );
    CHECK( render( f, peirce_unicode ) == unbracket( peirce ) );
    CHECK( render( f, schroeder_unicode ) == unbracket( schroeder ) );

    CHECK( translate( peano, peano_unicode, schroeder_unicode ) == unbracket( schroeder ) );
    CHECK( classify( f ).kind == verdict_class::tautology );
}

TEST_CASE( "schroeder accepts the underlined subset sign" )
{
    auto expected = impl( var( "x" ), var( "y" ) );
    CHECK( parse( "x ⊂\u0332 y", schroeder_unicode ) == expected );
    CHECK( parse( "x ⊆ y", schroeder_unicode ) == expected );
    CHECK( parse( "x ⋐ y", schroeder_unicode ) == expected );
}

TEST_CASE( "Barbara translates from peano-russell to peirce" )
{
    CHECK( translate( "(x > y) . (y > z) > (x > z)", peano_ascii, peirce_ascii ) ==
           "((x -< y) * (y -< z)) -< (x -< z)" );
    CHECK( render( parse( "(x > y) . (y > z) > (x > z)", peano_ascii ), peano_unicode ) ==
           "(x ⊃ y) · (y ⊃ z) ⊃ (x ⊃ z)" );
}

TEST_CASE( "identity translation reparses to the same tree" )
{
    const std::string text = "((x -< y) * (y -< z)) -< (x -< z)";
    CHECK( parse( translate( text, peirce_ascii, peirce_ascii ), peirce_ascii ) == parse( text, peirce_ascii ) );
}

TEST_CASE( "diagnostics" )
{
    CHECK_THROWS_AS( (void)parse( "", modern_ascii ), parse_error );
    CHECK( error_position( "(x -> y", modern_ascii ) == 7 );
    CHECK( error_position( "x -> y)", modern_ascii ) == 6 );
    CHECK( error_position( "x ->", modern_ascii ) == 4 );
    CHECK( error_position( "x y", modern_ascii ) == 2 );
    CHECK( error_position( "x # y", modern_ascii ) == 2 );
    CHECK( error_position( "[x -> y)", modern_ascii ) == 7 );
    CHECK( error_message( "x ⊃ y", peirce_unicode ).find( "peano-russell" ) != std::string::npos );
    CHECK( error_message( "x -> y", peirce_ascii ).find( "modern" ) != std::string::npos );
    CHECK( error_message( "?a -< b", peirce_ascii ).find( "particular" ) != std::string::npos );

    try {
        (void)parse( "x ->", modern_ascii );
        FAIL( "expected a diagnostic" );
    }
    catch ( const parse_error& e ) {
        CHECK_FALSE( e.expected().empty() );
    }
}

TEST_CASE( "peirce and schroeder lack equivalence and expand it" )
{
    CHECK_FALSE( is_primitive( connectives::equivalence, notation_id::peirce ) );
    CHECK( is_primitive( connectives::equivalence, notation_id::modern ) );
    auto f = equiv( var( "x" ), var( "y" ) );
    auto text = render( f, peirce_ascii );
    auto back = parse( text, peirce_ascii );
    CHECK( back == expand_for( f, notation_id::peirce ) );
    CHECK( render( back, peirce_ascii ) == text );
    CHECK( oracle::semantics( back, { "x", "y" } ) == oracle::semantics( f, { "x", "y" } ) );
}

TEST_CASE( "every connective survives every notation semantically" )
{
    for ( const auto& e : catalog() ) {
        auto f = formula::binary( e.id, var( "p" ), var( "q" ) );
        for ( auto n : all_notations )
            for ( auto enc : all_encodings ) {
                syntax_config cfg{ n, enc };
                auto once = parse( render( f, cfg ), cfg );
                CHECK_MESSAGE( oracle::semantics( once, { "p", "q" } ) == oracle::semantics( f, { "p", "q" } ),
                               e.name << " in " << to_string( n ) << "/" << to_string( enc ) );
                CHECK( parse( render( once, cfg ), cfg ) == once );
                if ( is_primitive( e.id, n ) )
                    CHECK( once == f );
            }
    }
}

TEST_CASE( "round-trip property on random formulas" )
{
    oracle::generator gen{ 20240917 };
    for ( int i = 0; i < 300; ++i ) {
        auto f = gen( 5 );
        auto vars = oracle::sorted_vars( f );
        auto meaning = oracle::semantics( f, vars );
        for ( auto n : all_notations )
            for ( auto enc : all_encodings ) {
                syntax_config cfg{ n, enc };
                auto expanded = expand_for( f, n );
                auto text = render( f, cfg );
                auto back = parse( text, cfg );
                REQUIRE_MESSAGE( back == expanded, text );
                CHECK( oracle::semantics( back, oracle::sorted_vars( f ) ) == meaning );
            }
    }
}

TEST_CASE( "cross-notation translation preserves the truth table" )
{
    oracle::generator gen{ 99 };
    for ( int i = 0; i < 100; ++i ) {
        auto f = gen( 4 );
        auto vars = oracle::sorted_vars( f );
        for ( auto from : all_notations )
            for ( auto to : all_notations ) {
                syntax_config a{ from, text_encoding::unicode };
                syntax_config b{ to, text_encoding::ascii };
                auto s = render( f, a );
                auto moved = parse( translate( s, a, b ), b );
                CHECK( oracle::semantics( moved, vars ) == oracle::semantics( parse( s, a ), vars ) );
            }
    }
}

TEST_CASE( "whitespace is insignificant" )
{
    CHECK( parse( "  x-<y ", peirce_ascii ) == parse( "x -< y", peirce_ascii ) );
}

TEST_CASE( "value glyphs" )
{
    CHECK( value_glyph( truth::t, notation_id::peirce ) == "v" );
    CHECK( value_glyph( truth::t, notation_id::modern ) == "t" );
    CHECK( value_glyph( truth::f, notation_id::schroeder ) == "f" );
}
