#include "illation/core.hpp"
#include "support.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>

namespace illation
{

namespace
{

constexpr truth T = truth::t;
constexpr truth F = truth::f;

constexpr std::string_view as_printed = "as printed";

// Rows of each column are read in input-pair order (t,t), (t,f), (f,t), (f,f).
const std::array< catalog_entry, 16 > the_catalog{ {
    { connective::from_vector( { F, F, F, F } ), 1, "constant-false", as_printed },
    { connective::from_vector( { F, F, F, T } ), 2, "joint-denial", as_printed },
    { connective::from_vector( { F, F, T, F } ), 3, "converse-nonimplication", as_printed },
    { connective::from_vector( { F, T, F, F } ), 4, "nonimplication", as_printed },
    { connective::from_vector( { T, F, F, F } ), 5, "conjunction", as_printed },
    { connective::from_vector( { T, T, F, F } ), 6, "left-projection", as_printed },
    { connective::from_vector( { T, F, T, F } ), 7, "right-projection", as_printed },
    { connective::from_vector( { T, F, F, T } ), 8, "equivalence",
      "printed as (F,F,F,T), a duplicate of column 2; the printed grid omits (T,F,F,T), "
      "which is assigned here" },
    { connective::from_vector( { F, T, T, F } ), 9, "exclusive-disjunction", as_printed },
    { connective::from_vector( { F, T, F, T } ), 10, "right-negation", as_printed },
    { connective::from_vector( { F, F, T, T } ), 11, "left-negation", as_printed },
    { connective::from_vector( { F, T, T, T } ), 12, "alternative-denial", as_printed },
    { connective::from_vector( { T, F, T, T } ), 13, "implication", as_printed },
    { connective::from_vector( { T, T, F, T } ), 14, "converse-implication", as_printed },
    { connective::from_vector( { T, T, T, F } ), 15, "disjunction", as_printed },
    { connective::from_vector( { T, T, T, T } ), 16, "constant-true", as_printed },
} };

// bits -> position in the_catalog
const std::array< std::uint8_t, 16 > by_bits = [] {
    std::array< std::uint8_t, 16 > index{};
    for ( std::size_t i = 0; i < the_catalog.size(); ++i )
        index[ the_catalog[ i ].id.bits() ] = static_cast< std::uint8_t >( i );
    return index;
}();

} // namespace

std::string_view connective::name() const { return catalog_entry_of( *this ).name; }
int connective::peirce_column() const { return catalog_entry_of( *this ).column; }

const std::array< catalog_entry, 16 >& catalog() { return the_catalog; }

const catalog_entry& catalog_entry_of( connective c ) { return the_catalog[ by_bits[ c.bits() ] ]; }

connective connective_from_vector( const truth_vector& v ) { return connective::from_vector( v ); }

connective connective_from_column( int column )
{
    if ( column < 1 || column > 16 )
        throw std::invalid_argument( "connective column must lie in 1..16" );
    return the_catalog[ static_cast< std::size_t >( column - 1 ) ].id;
}

connective connective_by_key( std::string_view key )
{
    for ( const auto& e : the_catalog )
        if ( e.name == key )
            return e.id;

    int column = 0;
    auto [ end, ec ] = std::from_chars( key.data(), key.data() + key.size(), column );
    if ( ec == std::errc{} && end == key.data() + key.size() )
        return connective_from_column( column );

    if ( key.size() == 4 ) {
        truth_vector v{};
        bool ok = true;
        for ( std::size_t i = 0; i < 4 && ok; ++i ) {
            char c = static_cast< char >( std::tolower( static_cast< unsigned char >( key[ i ] ) ) );
            if ( c == 't' || c == 'v' )
                v[ i ] = truth::t;
            else if ( c == 'f' )
                v[ i ] = truth::f;
            else
                ok = false;
        }
        if ( ok )
            return connective::from_vector( v );
    }

    throw std::invalid_argument( "unknown connective '" + std::string( key ) +
                                 "' (expected a catalog name, a column 1..16, or a vector such as tftt)" );
}

variable_name::variable_name( std::string text ) : _text{ std::move( text ) }
{
    if ( !valid( _text ) )
        throw invalid_variable_name( "invalid variable name '" + _text + "'" );
}

bool variable_name::valid( std::string_view text )
{
    if ( text.empty() || !std::isalpha( static_cast< unsigned char >( text.front() ) ) )
        return false;
    return std::all_of( text.begin(), text.end(), []( char c ) {
        return std::isalnum( static_cast< unsigned char >( c ) ) || c == '_';
    } );
}

formula formula::constant( truth v )
{
    return formula{ std::make_shared< const node >( constant_node{ v } ) };
}

formula formula::variable( std::string name )
{
    return formula{ std::make_shared< const node >( variable_node{ variable_name{ std::move( name ) } } ) };
}

formula formula::negation( formula operand )
{
    return formula{ std::make_shared< const node >( negation_node{ std::move( operand ) } ) };
}

formula formula::binary( connective c, formula left, formula right )
{
    return formula{ std::make_shared< const node >( binary_node{ c, std::move( left ), std::move( right ) } ) };
}

bool formula::is_constant() const { return std::holds_alternative< constant_node >( *_node ); }
bool formula::is_variable() const { return std::holds_alternative< variable_node >( *_node ); }
bool formula::is_negation() const { return std::holds_alternative< negation_node >( *_node ); }
bool formula::is_binary() const { return std::holds_alternative< binary_node >( *_node ); }

std::size_t formula::depth() const
{
    return std::visit( detail::overloaded{
                           []( const constant_node& ) -> std::size_t { return 0; },
                           []( const variable_node& ) -> std::size_t { return 0; },
                           []( const negation_node& n ) { return n.operand.depth() + 1; },
                           []( const binary_node& b ) { return std::max( b.left.depth(), b.right.depth() ) + 1; },
                       },
                       *_node );
}

std::size_t formula::size() const
{
    return std::visit( detail::overloaded{
                           []( const constant_node& ) -> std::size_t { return 1; },
                           []( const variable_node& ) -> std::size_t { return 1; },
                           []( const negation_node& n ) { return n.operand.size() + 1; },
                           []( const binary_node& b ) { return b.left.size() + b.right.size() + 1; },
                       },
                       *_node );
}

std::strong_ordering operator<=>( const formula& a, const formula& b )
{
    if ( a._node == b._node )
        return std::strong_ordering::equal;
    if ( auto c = a._node->index() <=> b._node->index(); c != 0 )
        return c;

    return std::visit(
        [ & ]( const auto& x ) -> std::strong_ordering {
            using T = std::decay_t< decltype( x ) >;
            const auto& y = std::get< T >( *b._node );
            if constexpr ( std::is_same_v< T, constant_node > )
                return x.value <=> y.value;
            else if constexpr ( std::is_same_v< T, variable_node > )
                return x.name <=> y.name;
            else if constexpr ( std::is_same_v< T, negation_node > )
                return x.operand <=> y.operand;
            else {
                if ( auto c = x.op <=> y.op; c != 0 )
                    return c;
                if ( auto c = x.left <=> y.left; c != 0 )
                    return c;
                return x.right <=> y.right;
            }
        },
        *a._node );
}

bool operator==( const formula& a, const formula& b ) { return ( a <=> b ) == 0; }

formula var( std::string name ) { return formula::variable( std::move( name ) ); }
formula neg( formula f ) { return formula::negation( std::move( f ) ); }
formula impl( formula a, formula b ) { return formula::binary( connectives::implication, std::move( a ), std::move( b ) ); }
formula conj( formula a, formula b ) { return formula::binary( connectives::conjunction, std::move( a ), std::move( b ) ); }
formula disj( formula a, formula b ) { return formula::binary( connectives::disjunction, std::move( a ), std::move( b ) ); }
formula equiv( formula a, formula b ) { return formula::binary( connectives::equivalence, std::move( a ), std::move( b ) ); }

std::string to_sexpr( const formula& f )
{
    return std::visit( detail::overloaded{
                           []( const constant_node& c ) { return std::string( 1, glyph( c.value ) ); },
                           []( const variable_node& v ) { return v.name.str(); },
                           []( const negation_node& n ) { return "(not " + to_sexpr( n.operand ) + ")"; },
                           []( const binary_node& b ) {
                               return "(" + std::string( b.op.name() ) + " " + to_sexpr( b.left ) + " " +
                                      to_sexpr( b.right ) + ")";
                           },
                       },
                       f.get() );
}

std::vector< variable_name > variables_of( const formula& f )
{
    std::vector< variable_name > out;
    std::function< void( const formula& ) > walk = [ & ]( const formula& g ) {
        std::visit( detail::overloaded{
                        []( const constant_node& ) {},
                        [ & ]( const variable_node& v ) {
                            if ( std::find( out.begin(), out.end(), v.name ) == out.end() )
                                out.push_back( v.name );
                        },
                        [ & ]( const negation_node& n ) { walk( n.operand ); },
                        [ & ]( const binary_node& b ) {
                            walk( b.left );
                            walk( b.right );
                        },
                    },
                    g.get() );
    };
    walk( f );
    return out;
}

std::vector< formula > subformulas( const formula& f )
{
    std::vector< formula > out;
    std::function< void( const formula& ) > walk = [ & ]( const formula& g ) {
        std::visit( detail::overloaded{
                        []( const constant_node& ) {},
                        []( const variable_node& ) {},
                        [ & ]( const negation_node& n ) { walk( n.operand ); },
                        [ & ]( const binary_node& b ) {
                            walk( b.left );
                            walk( b.right );
                        },
                    },
                    g.get() );
        if ( std::find( out.begin(), out.end(), g ) == out.end() )
            out.push_back( g );
    };
    walk( f );
    return out;
}

unbound_variable::unbound_variable( variable_name name )
    : std::runtime_error( "variable '" + name.str() + "' is not bound by the assignment" ), _name{ std::move( name ) }
{
}

} // namespace illation
