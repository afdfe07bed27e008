#include "illation/atlas.hpp"
#include "illation/bivalent.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <set>

using namespace illation;

namespace
{

truth_vector tv( std::string_view s )
{
    truth_vector v{};
    for ( std::size_t i = 0; i < 4; ++i )
        v[ i ] = s[ i ] == 'T' ? truth::t : truth::f;
    return v;
}

std::size_t binom( std::size_t n, std::size_t k ) { return k == 0 ? 1 : binom( n - 1, k - 1 ) * n / k; }

} // namespace

TEST_CASE( "printed grid" )
{
    const auto& g = paper_table();
    CHECK( g.column( 1 ) == tv( "FFFF" ) );
    CHECK( g.column( 16 ) == tv( "TTTT" ) );
    CHECK( g.column( 8 ) == tv( "FFFT" ) );
    CHECK( g.column( 2 ) == tv( "FFFT" ) );
    CHECK( duplicate_columns( g ) == std::vector< std::pair< int, int > >{ { 2, 8 } } );
    CHECK( missing_vectors( g ) == std::vector{ tv( "TFFT" ) } );
    bool flagged = false;
    for ( const auto& a : g.annotations )
        flagged = flagged || a.find( "duplicates column 2" ) != std::string::npos;
    CHECK( flagged );
}

TEST_CASE( "printed grid agrees with the catalog outside column 8" )
{
    const auto& g = paper_table();
    for ( int c = 1; c <= 16; ++c )
        if ( c != 8 )
            CHECK( connective_from_column( c ).vector() == g.column( c ) );
}

TEST_CASE( "x-frames" )
{
    CHECK( xframe_of( connectives::constant_false ).closed == std::array{ true, true, true, true } );
    CHECK( xframe_of( connectives::constant_true ).closed == std::array{ false, false, false, false } );
    CHECK( xframe_of( connectives::implication ).closed == std::array{ false, true, false, false } );

    CHECK( render_xframe( xframe_of( connectives::constant_false ) ) ==
           " ___ \n|\\ /|\n|/_\\|\nclosed: tt,tf,ft,ff\n" );
    CHECK( render_xframe( xframe_of( connectives::constant_true ) ) == " ___ \n|   |\n|___|\nclosed: none\n" );
    CHECK( render_xframe( xframe_of( connectives::implication ) ).ends_with( "closed: tf\n" ) );

    std::set< std::string > glyphs;
    for ( const auto& e : catalog() ) {
        auto x = xframe_of( e.id );
        CHECK( connective_of( x ) == e.id );
        int closed = 0;
        for ( bool b : x.closed )
            closed += b;
        CHECK( closed == 4 - e.id.true_count() );
        glyphs.insert( render_xframe( x ) );
    }
    CHECK( glyphs.size() == 16 );
}

TEST_CASE( "identify" )
{
    using enum truth;
    CHECK( identify( truth_vector{ t, f, f, t } ) == connectives::equivalence );
    CHECK( identify( truth_vector{ t, t, t, f } ) == connectives::disjunction );
    CHECK( identify( make_matrix_table( connectives::implication ) ) == connectives::implication );
    for ( const auto& e : catalog() )
        CHECK( identify( make_matrix_table( e.id ) ) == e.id );
}

TEST_CASE( "t-count distribution is binomial" )
{
    std::array< std::size_t, 5 > counts{};
    for ( const auto& e : catalog() )
        ++counts[ e.id.true_count() ];
    for ( std::size_t k = 0; k <= 4; ++k )
        CHECK( counts[ k ] == binom( 4, k ) );
}

TEST_CASE( "enumerator: one slot" )
{
    enumeration_spec spec{ 2, 1, shape_policy::right_combs, 100 };
    std::map< std::string, int > by_leaves;
    auto summary = enumerate_tautologies( spec, [ & ]( const enumerated_tautology& t ) {
        const auto& b = std::get< binary_node >( t.f.get() );
        by_leaves[ to_sexpr( b.left ) + to_sexpr( b.right ) ]++;
    } );
    CHECK( by_leaves == std::map< std::string, int >{ { "pp", 4 }, { "pq", 1 }, { "qp", 1 }, { "qq", 4 } } );
    REQUIRE( summary.per_slots.size() == 2 );
    CHECK( summary.per_slots[ 0 ].tautologies == 0 );
    CHECK( summary.per_slots[ 1 ].tautologies == 10 );
    CHECK( summary.per_slots[ 1 ].distinct_up_to_renaming == 5 );
}

TEST_CASE( "enumerator: zero slots yield nothing" )
{
    enumeration_spec spec{ 3, 0, shape_policy::right_combs, 100 };
    auto s = enumerate_tautologies( spec );
    CHECK( s.total_tautologies() == 0 );
}

TEST_CASE( "enumerator counts agree with brute force" )
{
    // Independent count: build every formula explicitly and test it with the oracle.
    for ( auto policy : { shape_policy::right_combs, shape_policy::all_trees } ) {
        enumeration_spec spec{ 2, 2, policy, 0 };
        auto s = enumerate_tautologies( spec );

        std::vector< formula > leaves{ var( "p" ), var( "q" ) };
        std::vector< formula > one;
        for ( unsigned c = 0; c < 16; ++c )
            for ( const auto& l : leaves )
                for ( const auto& r : leaves )
                    one.push_back( formula::binary( connective::from_bits( c ), l, r ) );
        std::size_t two = 0;
        for ( unsigned c = 0; c < 16; ++c )
            for ( const auto& l : leaves )
                for ( const auto& inner : one ) {
                    two += oracle::tautology( formula::binary( connective::from_bits( c ), l, inner ) );
                    if ( policy == shape_policy::all_trees )
                        two += oracle::tautology( formula::binary( connective::from_bits( c ), inner, l ) );
                }
        std::size_t single = 0;
        for ( const auto& f : one )
            single += oracle::tautology( f );
        CHECK( s.per_slots[ 1 ].tautologies == single );
        CHECK( s.per_slots[ 2 ].tautologies == two );
    }
}

TEST_CASE( "emitted formulas are tautologies, in a deterministic order" )
{
    enumeration_spec spec{ 3, 3, shape_policy::right_combs, 2000 };
    std::vector< std::string > first, second;
    auto s = enumerate_tautologies( spec, [ & ]( const enumerated_tautology& t ) {
        CHECK( classify( t.f ).kind == verdict_class::tautology );
        first.push_back( to_sexpr( t.f ) );
    } );
    (void)enumerate_tautologies( spec, [ & ]( const enumerated_tautology& t ) { second.push_back( to_sexpr( t.f ) ); } );
    CHECK( first.size() == 2000 );
    CHECK( s.emitted == 2000 );
    CHECK( first == second );
    CHECK( s.total_tautologies() > 1000 );
}

TEST_CASE( "enumerator bounds" )
{
    CHECK_THROWS_AS( (void)enumerate_tautologies( { 4, 1, shape_policy::right_combs, 0 } ), std::invalid_argument );
    CHECK_THROWS_AS( (void)enumerate_tautologies( { 1, 6, shape_policy::right_combs, 0 } ), std::invalid_argument );
}
