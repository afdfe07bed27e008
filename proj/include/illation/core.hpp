#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace illation
{

// Two-valued truth. Peirce's v (verum) and f (falsum) are t and f here.
enum class truth : std::uint8_t { t, f };

[[nodiscard]] constexpr truth operator!( truth v ) { return v == truth::t ? truth::f : truth::t; }
[[nodiscard]] constexpr truth to_truth( bool b ) { return b ? truth::t : truth::f; }
[[nodiscard]] constexpr bool is_true( truth v ) { return v == truth::t; }
[[nodiscard]] constexpr char glyph( truth v ) { return v == truth::t ? 't' : 'f'; }

// Peirce's triadic values: V (true), L ("limit", indeterminate), F (false).
enum class triad : std::uint8_t { V, L, F };

inline constexpr std::array< triad, 3 > all_triads{ triad::V, triad::L, triad::F };

[[nodiscard]] constexpr char glyph( triad v )
{
    switch ( v ) {
    case triad::V: return 'V';
    case triad::L: return 'L';
    case triad::F: return 'F';
    }
    return '?';
}

[[nodiscard]] constexpr triad to_triad( truth v ) { return v == truth::t ? triad::V : triad::F; }

// Input pairs of a binary connective, in the fixed order (t,t), (t,f), (f,t), (f,f).
struct input_pair
{
    truth left;
    truth right;

    friend constexpr bool operator==( input_pair, input_pair ) = default;
};

inline constexpr std::array< input_pair, 4 > input_pairs{ {
    { truth::t, truth::t },
    { truth::t, truth::f },
    { truth::f, truth::t },
    { truth::f, truth::f },
} };

[[nodiscard]] constexpr std::size_t pair_index( truth left, truth right )
{
    return ( left == truth::t ? 0 : 2 ) + ( right == truth::t ? 0 : 1 );
}

using truth_vector = std::array< truth, 4 >;

// One of the 16 binary truth functions. The four output bits are packed so
// that bit i is set iff the output on input_pairs[i] is t; the code therefore
// ranges over 0..15 and is a bijection with truth vectors.
class connective
{
    std::uint8_t _bits;

    explicit constexpr connective( std::uint8_t bits ) : _bits{ bits } {}

public:
    [[nodiscard]] static constexpr connective from_bits( unsigned bits )
    {
        if ( bits > 15 )
            throw std::out_of_range( "connective bits must lie in 0..15" );
        return connective{ static_cast< std::uint8_t >( bits ) };
    }

    [[nodiscard]] static constexpr connective from_vector( const truth_vector& v )
    {
        unsigned bits = 0;
        for ( std::size_t i = 0; i < 4; ++i )
            if ( v[ i ] == truth::t )
                bits |= 1u << i;
        return connective{ static_cast< std::uint8_t >( bits ) };
    }

    [[nodiscard]] constexpr unsigned bits() const { return _bits; }

    [[nodiscard]] constexpr truth apply( truth left, truth right ) const
    {
        return to_truth( ( _bits >> pair_index( left, right ) ) & 1u );
    }

    [[nodiscard]] constexpr truth_vector vector() const
    {
        truth_vector v{};
        for ( std::size_t i = 0; i < 4; ++i )
            v[ i ] = to_truth( ( _bits >> i ) & 1u );
        return v;
    }

    [[nodiscard]] constexpr int true_count() const
    {
        int n = 0;
        for ( unsigned b = _bits; b != 0; b >>= 1 )
            n += static_cast< int >( b & 1u );
        return n;
    }

    [[nodiscard]] std::string_view name() const;
    [[nodiscard]] int peirce_column() const;

    friend constexpr auto operator<=>( connective, connective ) = default;
};

namespace connectives
{
inline constexpr connective constant_false = connective::from_vector( { truth::f, truth::f, truth::f, truth::f } );
inline constexpr connective constant_true = connective::from_vector( { truth::t, truth::t, truth::t, truth::t } );
inline constexpr connective conjunction = connective::from_vector( { truth::t, truth::f, truth::f, truth::f } );
inline constexpr connective disjunction = connective::from_vector( { truth::t, truth::t, truth::t, truth::f } );
inline constexpr connective implication = connective::from_vector( { truth::t, truth::f, truth::t, truth::t } );
inline constexpr connective equivalence = connective::from_vector( { truth::t, truth::f, truth::f, truth::t } );
} // namespace connectives

// Catalog metadata for one connective. The column numbering follows Peirce's
// printed table of the sixteen connectives; see catalog_entry::provenance.
struct catalog_entry
{
    connective id;
    int column;
    std::string_view name;
    std::string_view provenance;
};

// The 16 entries ordered by column 1..16.
[[nodiscard]] const std::array< catalog_entry, 16 >& catalog();
[[nodiscard]] const catalog_entry& catalog_entry_of( connective c );
[[nodiscard]] connective connective_from_vector( const truth_vector& v );
[[nodiscard]] connective connective_from_column( int column );

// Looks a connective up by canonical name, by column number ("13"), or by a
// four-letter t/f vector ("tftt"). Throws std::invalid_argument otherwise.
[[nodiscard]] connective connective_by_key( std::string_view key );

class invalid_variable_name : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Letters, digits and underscores, starting with a letter. Case-sensitive.
class variable_name
{
    std::string _text;

public:
    explicit variable_name( std::string text );

    [[nodiscard]] static bool valid( std::string_view text );
    [[nodiscard]] const std::string& str() const { return _text; }

    friend auto operator<=>( const variable_name&, const variable_name& ) = default;
};

class formula;

struct constant_node { truth value; };
struct variable_node { variable_name name; };
struct negation_node;
struct binary_node;

// Immutable formula tree with shared subterms.
class formula
{
public:
    using node = std::variant< constant_node, variable_node, negation_node, binary_node >;

    [[nodiscard]] static formula constant( truth v );
    [[nodiscard]] static formula variable( std::string name );
    [[nodiscard]] static formula negation( formula operand );
    [[nodiscard]] static formula binary( connective c, formula left, formula right );

    [[nodiscard]] const node& get() const;

    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] bool is_variable() const;
    [[nodiscard]] bool is_negation() const;
    [[nodiscard]] bool is_binary() const;

    [[nodiscard]] std::size_t depth() const;
    [[nodiscard]] std::size_t size() const;

    // Structural equality.
    friend bool operator==( const formula& a, const formula& b );
    friend std::strong_ordering operator<=>( const formula& a, const formula& b );

private:
    explicit formula( std::shared_ptr< const node > n ) : _node{ std::move( n ) } {}

    std::shared_ptr< const node > _node;
};

struct negation_node { formula operand; };
struct binary_node { connective op; formula left; formula right; };

inline const formula::node& formula::get() const { return *_node; }

// Shorthand builders, used heavily by tests and the syllogistic module.
[[nodiscard]] formula var( std::string name );
[[nodiscard]] formula neg( formula f );
[[nodiscard]] formula impl( formula a, formula b );
[[nodiscard]] formula conj( formula a, formula b );
[[nodiscard]] formula disj( formula a, formula b );
[[nodiscard]] formula equiv( formula a, formula b );

// Debug form, e.g. (impl x (neg y)).
[[nodiscard]] std::string to_sexpr( const formula& f );

// Duplicate-free, first occurrence in left-to-right depth-first order.
[[nodiscard]] std::vector< variable_name > variables_of( const formula& f );

// Every distinct subformula, innermost first; the last entry is f itself.
[[nodiscard]] std::vector< formula > subformulas( const formula& f );

using assignment2 = std::map< variable_name, truth >;
using assignment3 = std::map< variable_name, triad >;

class unbound_variable : public std::runtime_error
{
    variable_name _name;

public:
    explicit unbound_variable( variable_name name );
    [[nodiscard]] const variable_name& name() const { return _name; }
};

} // namespace illation
