#include "illation/notation.hpp"
#include "support.hpp"

#include <algorithm>
#include <cctype>

namespace illation
{

namespace
{

enum class tok
{
    lparen,
    rparen,
    ident,
    const_t,
    const_f,
    not_prefix,
    not_postfix,
    conj,
    disj,
    impl,
    equiv,
    breve,
    end,
};

struct symbol
{
    std::string_view text;
    tok kind;
    text_encoding enc;
};

constexpr auto U = text_encoding::unicode;
constexpr auto A = text_encoding::ascii;

// The first entry of a given kind and encoding is the one the renderer emits.
const std::vector< symbol >& symbols_of( notation_id n )
{
    static const std::vector< symbol > peirce{
        { "≺", tok::impl, U },         { "-", tok::not_prefix, U },  { "\u0304", tok::not_postfix, U },
        { "\u0305", tok::not_postfix, U }, { "·", tok::conj, U },     { "+", tok::disj, U },
        { "\u030C", tok::breve, U },   { "-<", tok::impl, A },       { "-", tok::not_prefix, A },
        { "*", tok::conj, A },         { "+", tok::disj, A },        { "?", tok::breve, A },
    };
    static const std::vector< symbol > schroeder{
        { "⋐", tok::impl, U },  { "⊆", tok::impl, U },  { "⊂\u0332", tok::impl, U }, { "′", tok::not_postfix, U },
        { "·", tok::conj, U },  { "+", tok::disj, U },  { "1", tok::const_t, U },     { "0", tok::const_f, U },
        { "=<", tok::impl, A }, { "'", tok::not_postfix, A }, { "*", tok::conj, A },  { "+", tok::disj, A },
        { "1", tok::const_t, A }, { "0", tok::const_f, A },
    };
    static const std::vector< symbol > peano{
        { "⊃", tok::impl, U },  { "∼", tok::not_prefix, U }, { "·", tok::conj, U },  { "∨", tok::disj, U },
        { "≡", tok::equiv, U }, { "⊤", tok::const_t, U },    { "⊥", tok::const_f, U }, { ">", tok::impl, A },
        { "~", tok::not_prefix, A }, { ".", tok::conj, A },  { "|", tok::disj, A },   { "==", tok::equiv, A },
    };
    static const std::vector< symbol > modern{
        { "→", tok::impl, U },   { "¬", tok::not_prefix, U }, { "∧", tok::conj, U },  { "∨", tok::disj, U },
        { "↔", tok::equiv, U },  { "⊤", tok::const_t, U },    { "⊥", tok::const_f, U }, { "->", tok::impl, A },
        { "!", tok::not_prefix, A }, { "&", tok::conj, A },   { "|", tok::disj, A },   { "<->", tok::equiv, A },
    };
    switch ( n ) {
    case notation_id::peirce: return peirce;
    case notation_id::schroeder: return schroeder;
    case notation_id::peano_russell: return peano;
    case notation_id::modern: return modern;
    }
    return modern;
}

// Constants spelled as words; they are reserved and cannot name variables.
std::pair< std::string_view, std::string_view > word_constants( notation_id n )
{
    switch ( n ) {
    case notation_id::peirce: return { "v", "f" };
    case notation_id::peano_russell:
    case notation_id::modern: return { "T", "F" };
    case notation_id::schroeder: return { "", "" };
    }
    return { "", "" };
}

std::string_view emitted( notation_id n, text_encoding e, tok kind )
{
    for ( const auto& s : symbols_of( n ) )
        if ( s.kind == kind && s.enc == e )
            return s.text;
    if ( kind == tok::const_t || kind == tok::const_f ) {
        auto [ t, f ] = word_constants( n );
        return kind == tok::const_t ? t : f;
    }
    return {};
}

std::string describe( tok kind )
{
    switch ( kind ) {
    case tok::lparen: return "'('";
    case tok::rparen: return "')'";
    case tok::ident: return "variable";
    case tok::const_t:
    case tok::const_f: return "constant";
    case tok::not_prefix:
    case tok::not_postfix: return "negation";
    case tok::conj: return "conjunction";
    case tok::disj: return "disjunction";
    case tok::impl: return "implication";
    case tok::equiv: return "equivalence";
    case tok::breve: return "breve";
    case tok::end: return "end of input";
    }
    return "token";
}

struct token
{
    tok kind;
    std::size_t pos;
    std::string text;
    char bracket = 0; // opening or closing character for parentheses
};

bool is_space( char c ) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::vector< token > lex( std::string_view text, notation_id n )
{
    std::vector< token > out;
    const auto& table = symbols_of( n );
    std::size_t i = 0;
    while ( i < text.size() ) {
        char c = text[ i ];
        if ( is_space( c ) ) {
            ++i;
            continue;
        }
        if ( c == '(' || c == '[' || c == '{' ) {
            out.push_back( { tok::lparen, i, std::string( 1, c ), c } );
            ++i;
            continue;
        }
        if ( c == ')' || c == ']' || c == '}' ) {
            out.push_back( { tok::rparen, i, std::string( 1, c ), c } );
            ++i;
            continue;
        }
        if ( std::isalpha( static_cast< unsigned char >( c ) ) ) {
            std::size_t j = i;
            while ( j < text.size() &&
                    ( std::isalnum( static_cast< unsigned char >( text[ j ] ) ) || text[ j ] == '_' ) )
                ++j;
            std::string word( text.substr( i, j - i ) );
            auto [ t, f ] = word_constants( n );
            tok kind = word == t ? tok::const_t : word == f ? tok::const_f : tok::ident;
            out.push_back( { kind, i, std::move( word ) } );
            i = j;
            continue;
        }

        const symbol* best = nullptr;
        for ( const auto& s : table )
            if ( text.substr( i ).starts_with( s.text ) && ( !best || s.text.size() > best->text.size() ) )
                best = &s;

        // A longer match in another notation wins, so "->" in peirce is
        // reported as modern implication rather than a negation sign.
        const symbol* foreign = nullptr;
        notation_id owner = n;
        for ( auto other : all_notations ) {
            if ( other == n )
                continue;
            for ( const auto& s : symbols_of( other ) )
                if ( text.substr( i ).starts_with( s.text ) && ( !foreign || s.text.size() > foreign->text.size() ) ) {
                    foreign = &s;
                    owner = other;
                }
        }
        if ( foreign && ( !best || foreign->text.size() > best->text.size() ) )
            throw parse_error( i, "symbol '" + std::string( foreign->text ) + "' belongs to " +
                                      std::string( to_string( owner ) ) + " notation, not " +
                                      std::string( to_string( n ) ) );
        if ( best ) {
            out.push_back( { best->kind, i, std::string( best->text ) } );
            i += best->text.size();
            continue;
        }
        std::size_t len = 1;
        auto lead = static_cast< unsigned char >( c );
        if ( lead >= 0xC0 )
            len = lead < 0xE0 ? 2 : lead < 0xF0 ? 3 : 4;
        throw parse_error( i, "unknown symbol '" + std::string( text.substr( i, len ) ) + "'" );
    }
    out.push_back( { tok::end, text.size(), "" } );
    return out;
}

class parser
{
    std::vector< token > _toks;
    std::size_t _at = 0;

    const token& peek() const { return _toks[ _at ]; }
    const token& next() { return _toks[ _at++ ]; }

    [[noreturn]] void fail( const std::string& message, std::vector< std::string > expected ) const
    {
        throw parse_error( peek().pos, message, std::move( expected ) );
    }

    [[noreturn]] void unexpected( std::vector< std::string > expected ) const
    {
        const auto& t = peek();
        std::string what = t.kind == tok::end ? "end of input" : "'" + t.text + "'";
        if ( t.kind == tok::breve )
            fail( "the breve marks a particular (quantified) proposition, which has no propositional reading",
                  std::move( expected ) );
        fail( "unexpected " + what, std::move( expected ) );
    }

    formula parse_equiv()
    {
        auto left = parse_impl();
        if ( peek().kind == tok::equiv ) {
            next();
            return formula::binary( connectives::equivalence, std::move( left ), parse_equiv() );
        }
        return left;
    }

    formula parse_impl()
    {
        auto left = parse_disj();
        if ( peek().kind == tok::impl ) {
            next();
            return formula::binary( connectives::implication, std::move( left ), parse_impl() );
        }
        return left;
    }

    formula parse_disj()
    {
        auto left = parse_conj();
        while ( peek().kind == tok::disj ) {
            next();
            left = formula::binary( connectives::disjunction, std::move( left ), parse_conj() );
        }
        return left;
    }

    formula parse_conj()
    {
        auto left = parse_unary();
        while ( peek().kind == tok::conj ) {
            next();
            left = formula::binary( connectives::conjunction, std::move( left ), parse_unary() );
        }
        return left;
    }

    formula parse_unary()
    {
        if ( peek().kind == tok::not_prefix ) {
            next();
            return formula::negation( parse_unary() );
        }
        auto f = parse_primary();
        while ( peek().kind == tok::not_postfix ) {
            next();
            f = formula::negation( std::move( f ) );
        }
        return f;
    }

    formula parse_primary()
    {
        static const std::vector< std::string > operand{ "variable", "constant", "negation", "'('" };
        const auto& t = peek();
        switch ( t.kind ) {
        case tok::ident: {
            std::string name = next().text;
            return formula::variable( std::move( name ) );
        }
        case tok::const_t: next(); return formula::constant( truth::t );
        case tok::const_f: next(); return formula::constant( truth::f );
        case tok::lparen: {
            char open = next().bracket;
            auto inner = parse_equiv();
            char close = open == '(' ? ')' : open == '[' ? ']' : '}';
            if ( peek().kind != tok::rparen ) {
                if ( peek().kind == tok::end )
                    fail( "unbalanced parentheses: missing '" + std::string( 1, close ) + "'",
                          { "'" + std::string( 1, close ) + "'" } );
                unexpected( { "binary connective", "'" + std::string( 1, close ) + "'" } );
            }
            if ( peek().bracket != close )
                fail( "mismatched bracket: expected '" + std::string( 1, close ) + "'",
                      { "'" + std::string( 1, close ) + "'" } );
            next();
            return inner;
        }
        case tok::rparen:
            fail( "unbalanced parentheses: unexpected '" + t.text + "'", operand );
        case tok::end:
            fail( "dangling operator: expected an operand at end of input", operand );
        default:
            if ( t.kind != tok::breve && t.kind != tok::not_postfix )
                fail( "dangling operator: " + describe( t.kind ) + " '" + t.text + "' lacks a left operand",
                      operand );
            unexpected( operand );
        }
    }

public:
    explicit parser( std::vector< token > toks ) : _toks{ std::move( toks ) } {}

    formula run()
    {
        auto f = parse_equiv();
        if ( peek().kind == tok::rparen )
            fail( "unbalanced parentheses: unexpected '" + peek().text + "'", { "binary connective", "end of input" } );
        if ( peek().kind != tok::end ) {
            if ( peek().kind == tok::ident || peek().kind == tok::lparen || peek().kind == tok::const_t ||
                 peek().kind == tok::const_f || peek().kind == tok::not_prefix )
                fail( "juxtaposition is not an operator; expected a binary connective",
                      { "binary connective", "end of input" } );
            unexpected( { "binary connective", "end of input" } );
        }
        return f;
    }
};

constexpr int precedence( connective c )
{
    if ( c == connectives::conjunction )
        return 4;
    if ( c == connectives::disjunction )
        return 3;
    if ( c == connectives::implication )
        return 2;
    return 1; // equivalence
}

constexpr bool right_associative( connective c )
{
    return c == connectives::implication || c == connectives::equivalence;
}

tok token_of( connective c )
{
    if ( c == connectives::conjunction )
        return tok::conj;
    if ( c == connectives::disjunction )
        return tok::disj;
    if ( c == connectives::implication )
        return tok::impl;
    return tok::equiv;
}

class renderer
{
    syntax_config _cfg;

    std::string_view sym( tok kind ) const { return emitted( _cfg.notation, _cfg.encoding, kind ); }

    static std::string parens( std::string s ) { return "(" + std::move( s ) + ")"; }

    bool needs_parens( const binary_node& child, const binary_node& parent, bool is_left ) const
    {
        int pc = precedence( child.op );
        int pp = precedence( parent.op );
        switch ( _cfg.notation ) {
        case notation_id::peirce:
        case notation_id::schroeder:
            return true;
        case notation_id::peano_russell:
            return pc <= pp;
        case notation_id::modern:
            if ( pc != pp )
                return pc < pp;
            return right_associative( parent.op ) ? is_left : !is_left;
        }
        return true;
    }

    std::string operand( const formula& child, const binary_node& parent, bool is_left ) const
    {
        const auto* b = std::get_if< binary_node >( &child.get() );
        if ( b && needs_parens( *b, parent, is_left ) )
            return parens( go( child ) );
        return go( child );
    }

    std::string negated( const formula& operand ) const
    {
        std::string inner = operand.is_binary() ? parens( go( operand ) ) : go( operand );
        switch ( _cfg.notation ) {
        case notation_id::schroeder:
            return inner + std::string( sym( tok::not_postfix ) );
        case notation_id::peirce:
            if ( _cfg.encoding == text_encoding::unicode && ( operand.is_variable() || operand.is_constant() ) )
                return inner + std::string( sym( tok::not_postfix ) );
            return std::string( sym( tok::not_prefix ) ) + inner;
        default:
            return std::string( sym( tok::not_prefix ) ) + inner;
        }
    }

public:
    explicit renderer( syntax_config cfg ) : _cfg{ cfg } {}

    std::string go( const formula& f ) const
    {
        return std::visit( detail::overloaded{
                               [ & ]( const constant_node& c ) {
                                   return std::string( sym( c.value == truth::t ? tok::const_t : tok::const_f ) );
                               },
                               []( const variable_node& v ) { return v.name.str(); },
                               [ & ]( const negation_node& n ) { return negated( n.operand ); },
                               [ & ]( const binary_node& b ) {
                                   return operand( b.left, b, true ) + " " +
                                          std::string( sym( token_of( b.op ) ) ) + " " +
                                          operand( b.right, b, false );
                               },
                           },
                           f.get() );
    }
};

// Truth-vector-preserving definitions over P (left) and Q (right).
formula expand_connective( connective c, const formula& p, const formula& q, bool has_equiv )
{
    auto top = []( const formula& x ) { return impl( x, x ); };
    auto equiv_of = [ & ]( const formula& a, const formula& b ) {
        return has_equiv ? equiv( a, b ) : conj( impl( a, b ), impl( b, a ) );
    };
    switch ( c.peirce_column() ) {
    case 1: return neg( conj( top( p ), top( q ) ) );
    case 2: return neg( disj( p, q ) );
    case 3: return conj( neg( p ), q );
    case 4: return conj( p, neg( q ) );
    case 5: return conj( p, q );
    case 6: return conj( p, top( q ) );
    case 7: return conj( top( p ), q );
    case 8: return equiv_of( p, q );
    case 9: return neg( equiv_of( p, q ) );
    case 10: return conj( top( p ), neg( q ) );
    case 11: return conj( neg( p ), top( q ) );
    case 12: return neg( conj( p, q ) );
    case 13: return impl( p, q );
    case 14: return disj( p, neg( q ) );
    case 15: return disj( p, q );
    case 16: return conj( top( p ), top( q ) );
    }
    throw std::logic_error( "connective column out of range" );
}

} // namespace

parse_error::parse_error( std::size_t position, const std::string& message, std::vector< std::string > expected )
    : std::runtime_error( message ), _position{ position }, _expected{ std::move( expected ) }
{
}

std::string_view to_string( notation_id n )
{
    switch ( n ) {
    case notation_id::peirce: return "peirce";
    case notation_id::schroeder: return "schroeder";
    case notation_id::peano_russell: return "peano-russell";
    case notation_id::modern: return "modern";
    }
    return "?";
}

std::string_view to_string( text_encoding e ) { return e == text_encoding::unicode ? "unicode" : "ascii"; }

std::optional< notation_id > parse_notation( std::string_view s )
{
    for ( auto n : all_notations )
        if ( to_string( n ) == s )
            return n;
    return std::nullopt;
}

std::optional< text_encoding > parse_encoding( std::string_view s )
{
    for ( auto e : all_encodings )
        if ( to_string( e ) == s )
            return e;
    return std::nullopt;
}

formula parse( std::string_view text, syntax_config config )
{
    if ( std::all_of( text.begin(), text.end(), is_space ) )
        throw parse_error( text.size(), "empty formula", { "variable", "constant", "negation", "'('" } );
    return parser{ lex( text, config.notation ) }.run();
}

bool is_primitive( connective c, notation_id n )
{
    if ( c == connectives::conjunction || c == connectives::disjunction || c == connectives::implication )
        return true;
    if ( c == connectives::equivalence )
        return n == notation_id::peano_russell || n == notation_id::modern;
    return false;
}

formula expand_for( const formula& f, notation_id n )
{
    return std::visit( detail::overloaded{
                           [ & ]( const constant_node& ) { return f; },
                           [ & ]( const variable_node& ) { return f; },
                           [ & ]( const negation_node& x ) { return neg( expand_for( x.operand, n ) ); },
                           [ & ]( const binary_node& b ) {
                               auto l = expand_for( b.left, n );
                               auto r = expand_for( b.right, n );
                               if ( is_primitive( b.op, n ) )
                                   return formula::binary( b.op, std::move( l ), std::move( r ) );
                               return expand_connective( b.op, l, r, is_primitive( connectives::equivalence, n ) );
                           },
                       },
                       f.get() );
}

std::string render( const formula& f, syntax_config config )
{
    return renderer{ config }.go( expand_for( f, config.notation ) );
}

std::string translate( std::string_view text, syntax_config from, syntax_config to )
{
    return render( parse( text, from ), to );
}

std::string_view value_glyph( truth v, notation_id n )
{
    if ( v == truth::f )
        return "f";
    return n == notation_id::peirce ? "v" : "t";
}

} // namespace illation
