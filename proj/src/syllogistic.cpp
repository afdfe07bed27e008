#include "illation/syllogistic.hpp"
#include "support.hpp"

#include <cctype>

namespace illation
{

namespace
{

std::string breve( const variable_name& v, text_encoding enc )
{
    return enc == text_encoding::unicode ? v.str() + "\u030C" : "?" + v.str();
}

std::string capitalized( const variable_name& v )
{
    std::string s = v.str();
    s.front() = static_cast< char >( std::toupper( static_cast< unsigned char >( s.front() ) ) );
    return s;
}

} // namespace

std::optional< figure > parse_figure( std::string_view s )
{
    if ( s == "A" || s == "a" )
        return figure::A;
    if ( s == "E" || s == "e" )
        return figure::E;
    if ( s == "I" || s == "i" )
        return figure::I;
    if ( s == "O" || s == "o" )
        return figure::O;
    return std::nullopt;
}

char to_char( figure f )
{
    switch ( f ) {
    case figure::A: return 'A';
    case figure::E: return 'E';
    case figure::I: return 'I';
    case figure::O: return 'O';
    }
    return '?';
}

std::string render_categorical( const categorical_form& c, syntax_config config )
{
    const bool particular = c.kind == figure::I || c.kind == figure::O;
    const bool negative = c.kind == figure::E || c.kind == figure::O;

    auto subject = var( c.subject.str() );
    auto predicate = var( c.predicate.str() );
    auto text = render( impl( subject, negative ? neg( predicate ) : predicate ), config );
    if ( !particular )
        return text;

    // The subject leads the rendering in every notation.
    return breve( c.subject, config.encoding ) + text.substr( c.subject.str().size() );
}

formula as_formula( const categorical_form& c )
{
    switch ( c.kind ) {
    case figure::A: return impl( var( c.subject.str() ), var( c.predicate.str() ) );
    case figure::E: return impl( var( c.subject.str() ), neg( var( c.predicate.str() ) ) );
    case figure::I:
    case figure::O: break;
    }
    throw quantified_form( std::string( "form " ) + to_char( c.kind ) +
                           " is particular; it needs quantification and has no propositional formula" );
}

barbara_forms barbara( const variable_name& x, const variable_name& y, const variable_name& z )
{
    auto vx = var( x.str() );
    auto vy = var( y.str() );
    auto vz = var( z.str() );
    auto nested = impl( impl( vx, vy ), impl( impl( vy, vz ), impl( vx, vz ) ) );
    auto conjunctive = impl( conj( impl( vx, vy ), impl( vy, vz ) ), impl( vx, vz ) );
    return { nested, conjunctive, classify( nested ), classify( conjunctive ) };
}

std::string render_aeio_table( syntax_config config )
{
    const variable_name a{ "a" };
    const variable_name b{ "b" };
    struct line
    {
        figure kind;
        std::string gloss;
        std::string_view label;
    };
    const std::array< line, 4 > lines{ {
        { figure::A, "All " + capitalized( a ) + " are " + capitalized( b ), "(universal affirmative)" },
        { figure::E, "No " + capitalized( a ) + " is " + capitalized( b ), "(universal negative)" },
        { figure::I, "Some " + capitalized( a ) + " is " + capitalized( b ), "(particular affirmative)" },
        { figure::O, "Some " + capitalized( a ) + " is not " + capitalized( b ), "(particular negative)" },
    } };

    std::vector< std::string > formulas;
    std::size_t formula_width = 0;
    std::size_t gloss_width = 0;
    for ( const auto& l : lines ) {
        formulas.push_back( render_categorical( { l.kind, a, b }, config ) );
        formula_width = std::max( formula_width, detail::display_width( formulas.back() ) );
        gloss_width = std::max( gloss_width, l.gloss.size() );
    }

    std::string out;
    for ( std::size_t i = 0; i < lines.size(); ++i ) {
        out += std::string( 1, to_char( lines[ i ].kind ) ) + ". " + detail::pad_right( formulas[ i ], formula_width ) +
               "  " + detail::pad_right( lines[ i ].gloss, gloss_width ) + "  " + std::string( lines[ i ].label ) +
               "\n";
    }
    return out;
}

} // namespace illation
