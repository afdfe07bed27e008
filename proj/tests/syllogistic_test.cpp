#include "illation/bivalent.hpp"
#include "illation/notation.hpp"
#include "illation/syllogistic.hpp"

#include <doctest.h>

using namespace illation;

namespace
{

constexpr syntax_config peirce_unicode{ notation_id::peirce, text_encoding::unicode };
constexpr syntax_config peirce_ascii{ notation_id::peirce, text_encoding::ascii };
const variable_name a{ "a" };
const variable_name b{ "b" };

} // namespace

TEST_CASE( "categorical forms" )
{
    CHECK( render_categorical( { figure::A, a, b }, peirce_unicode ) == "a ≺ b" );
    CHECK( render_categorical( { figure::E, a, b }, peirce_unicode ) == "a ≺ b\u0304" );
    CHECK( render_categorical( { figure::I, a, b }, peirce_unicode ) == "a\u030C ≺ b" );
    CHECK( render_categorical( { figure::O, a, b }, peirce_unicode ) == "a\u030C ≺ b\u0304" );
    CHECK( render_categorical( { figure::O, a, b }, peirce_ascii ) == "?a -< -b" );
    CHECK( render_categorical( { figure::E, a, b }, { notation_id::schroeder, text_encoding::unicode } ) == "a ⋐ b′" );
}

TEST_CASE( "universal forms reparse to their formulas" )
{
    for ( auto fig : { figure::A, figure::E } )
        for ( auto cfg : { peirce_unicode, peirce_ascii, syntax_config{ notation_id::modern, text_encoding::ascii } } )
            CHECK( parse( render_categorical( { fig, a, b }, cfg ), cfg ) == as_formula( { fig, a, b } ) );
    CHECK( as_formula( { figure::A, a, b } ) == impl( var( "a" ), var( "b" ) ) );
    CHECK( as_formula( { figure::E, a, b } ) == impl( var( "a" ), neg( var( "b" ) ) ) );
    CHECK_THROWS_AS( (void)as_formula( { figure::I, a, b } ), quantified_form );
    CHECK_THROWS_AS( (void)as_formula( { figure::O, a, b } ), quantified_form );
}

TEST_CASE( "Barbara" )
{
    auto forms = barbara( variable_name{ "x" }, variable_name{ "y" }, variable_name{ "z" } );
    CHECK( render( forms.conjunctive, { notation_id::peano_russell, text_encoding::unicode } ) ==
           "(x ⊃ y) · (y ⊃ z) ⊃ (x ⊃ z)" );
    CHECK( forms.nested_verdict.kind == verdict_class::tautology );
    CHECK( forms.conjunctive_verdict.kind == verdict_class::tautology );

    auto x = var( "x" );
    auto y = var( "y" );
    auto z = var( "z" );
    CHECK( entails( { impl( x, y ), impl( y, z ) }, impl( x, z ) ).valid );

    for ( const char* p : { "x", "y" } )
        for ( const char* q : { "x", "y" } )
            for ( const char* r : { "x", "y" } ) {
                auto f = barbara( variable_name{ p }, variable_name{ q }, variable_name{ r } );
                CHECK( f.nested_verdict.kind == verdict_class::tautology );
                CHECK( f.conjunctive_verdict.kind == verdict_class::tautology );
            }
}

TEST_CASE( "the scheme" )
{
    CHECK( render_aeio_table( peirce_unicode ) ==
           "A. a ≺ b  All A are B      (universal affirmative)\n"
           "E. a ≺ b\u0304  No A is B        (universal negative)\n"
           "I. a\u030C ≺ b  Some A is B      (particular affirmative)\n"
           "O. a\u030C ≺ b\u0304  Some A is not B  (particular negative)\n" );
}
