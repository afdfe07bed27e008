#include "illation/indirect.hpp"
#include "support.hpp"

#include <deque>
#include <map>

namespace illation
{

namespace
{

constexpr std::size_t none = static_cast< std::size_t >( -1 );

struct column_info
{
    enum class kind { constant, variable, negation, binary } kind;
    std::size_t left = none;
    std::size_t right = none;
    connective op = connectives::constant_false;
    truth value = truth::t;
};

std::vector< column_info > describe_columns( const std::vector< formula >& cols )
{
    std::map< formula, std::size_t > index;
    for ( std::size_t i = 0; i < cols.size(); ++i )
        index.emplace( cols[ i ], i );

    std::vector< column_info > out;
    for ( const auto& c : cols ) {
        out.push_back( std::visit( detail::overloaded{
                                       []( const constant_node& k ) {
                                           return column_info{ column_info::kind::constant, none, none,
                                                               connectives::constant_false, k.value };
                                       },
                                       []( const variable_node& ) { return column_info{ column_info::kind::variable }; },
                                       [ & ]( const negation_node& n ) {
                                           return column_info{ column_info::kind::negation, index.at( n.operand ) };
                                       },
                                       [ & ]( const binary_node& b ) {
                                           return column_info{ column_info::kind::binary, index.at( b.left ),
                                                               index.at( b.right ), b.op };
                                       },
                                   },
                                   c.get() ) );
    }
    return out;
}

std::vector< input_pair > pairs_giving( connective c, truth w )
{
    std::vector< input_pair > s;
    for ( auto p : input_pairs )
        if ( c.apply( p.left, p.right ) == w )
            s.push_back( p );
    return s;
}

bool contains( const std::vector< input_pair >& s, input_pair p )
{
    return std::find( s.begin(), s.end(), p ) != s.end();
}

class search
{
    const std::vector< column_info >& _info;
    indirect_trace& _trace;
    partial_assignment _open;
    bool _found = false;

    std::size_t record( trace_step step )
    {
        _trace.steps.push_back( std::move( step ) );
        return _trace.steps.size() - 1;
    }

    struct forced_value
    {
        std::size_t column;
        truth value;
    };

    // The rule at a constrained column, ignoring what is known of its children.
    // Returns false when the node cannot take its value at all.
    bool rule( std::size_t col, truth w, std::vector< forced_value >& forced ) const
    {
        const auto& c = _info[ col ];
        switch ( c.kind ) {
        case column_info::kind::variable: return true;
        case column_info::kind::constant: return c.value == w;
        case column_info::kind::negation: forced.push_back( { c.left, !w } ); return true;
        case column_info::kind::binary: {
            auto s = pairs_giving( c.op, w );
            if ( s.empty() )
                return false;
            auto agree = [ & ]( auto side ) {
                for ( const auto& p : s )
                    if ( side( p ) != side( s.front() ) )
                        return false;
                return true;
            };
            if ( agree( []( input_pair p ) { return p.left; } ) )
                forced.push_back( { c.left, s.front().left } );
            if ( agree( []( input_pair p ) { return p.right; } ) )
                forced.push_back( { c.right, s.front().right } );
            return true;
        }
        }
        return true;
    }

    // Input pairs still reachable given the known child values.
    std::vector< input_pair > possible( const column_info& c, const partial_assignment& values ) const
    {
        std::vector< input_pair > out;
        for ( auto p : input_pairs ) {
            if ( c.left == c.right && p.left != p.right )
                continue;
            if ( values[ c.left ] && *values[ c.left ] != p.left )
                continue;
            if ( values[ c.right ] && *values[ c.right ] != p.right )
                continue;
            out.push_back( p );
        }
        return out;
    }

    // Returns the step index closing the branch, or none if propagation ends
    // consistently.
    std::size_t propagate( partial_assignment& values, std::deque< std::size_t > work, std::size_t& current )
    {
        while ( !work.empty() ) {
            auto col = work.front();
            work.pop_front();
            auto w = *values[ col ];

            std::vector< forced_value > forced;
            if ( !rule( col, w, forced ) ) {
                trace_step closed{ values, step_note::branch_closed, current, col };
                closed.conflict = col;
                return current = record( std::move( closed ) );
            }

            bool changed = false;
            auto next = values;
            for ( auto [ target, value ] : forced ) {
                if ( next[ target ] && *next[ target ] != value ) {
                    trace_step closed{ values, step_note::branch_closed, current, col };
                    closed.conflict = target;
                    return current = record( std::move( closed ) );
                }
                if ( !next[ target ] ) {
                    next[ target ] = value;
                    work.push_back( target );
                    changed = true;
                }
            }
            if ( changed ) {
                values = std::move( next );
                current = record( { values, step_note::forced, current, col } );
            }
        }
        return none;
    }

    // Prime implicants of the pairs giving w, in order of the first canonical
    // pair each covers.
    static std::vector< std::vector< case_literal > > cases( const column_info& c, truth w )
    {
        auto s = pairs_giving( c.op, w );
        std::vector< std::vector< case_literal > > out;
        auto add = [ & ]( std::vector< case_literal > cube ) {
            if ( std::find( out.begin(), out.end(), cube ) == out.end() )
                out.push_back( std::move( cube ) );
        };
        for ( auto p : s ) {
            bool covered = false;
            if ( contains( s, { p.left, truth::t } ) && contains( s, { p.left, truth::f } ) ) {
                add( { { c.left, p.left } } );
                covered = true;
            }
            if ( contains( s, { truth::t, p.right } ) && contains( s, { truth::f, p.right } ) ) {
                add( { { c.right, p.right } } );
                covered = true;
            }
            if ( !covered )
                add( { { c.left, p.left }, { c.right, p.right } } );
        }
        return out;
    }

    bool explore( partial_assignment values, std::deque< std::size_t > work, std::size_t current )
    {
        if ( propagate( values, std::move( work ), current ) != none )
            return false;

        std::size_t split = none;
        for ( std::size_t i = _info.size(); i-- > 0; ) {
            const auto& c = _info[ i ];
            if ( c.kind != column_info::kind::binary || !values[ i ] )
                continue;
            auto s = pairs_giving( c.op, *values[ i ] );
            auto reachable = possible( c, values );
            bool decided = std::all_of( reachable.begin(), reachable.end(),
                                        [ & ]( input_pair p ) { return contains( s, p ); } );
            if ( !decided ) {
                split = i;
                break;
            }
        }
        if ( split == none ) {
            _open = std::move( values );
            return true;
        }

        auto options = cases( _info[ split ], *values[ split ] );
        const auto branch_point = current;
        for ( std::size_t k = 0; k < options.size(); ++k ) {
            auto next = values;
            std::deque< std::size_t > assumed;
            std::optional< std::size_t > conflict;
            for ( auto [ column, value ] : options[ k ] ) {
                if ( next[ column ] && *next[ column ] != value )
                    conflict = column;
                else if ( !next[ column ] ) {
                    next[ column ] = value;
                    assumed.push_back( column );
                }
            }
            trace_step open{ conflict ? values : next, step_note::branch_open, branch_point, split };
            open.assumed = options[ k ];
            open.case_number = k + 1;
            open.case_count = options.size();
            auto at = record( std::move( open ) );
            if ( conflict ) {
                trace_step closed{ values, step_note::branch_closed, at, split };
                closed.conflict = conflict;
                record( std::move( closed ) );
                continue;
            }
            if ( explore( std::move( next ), std::move( assumed ), at ) )
                return true;
        }
        return false;
    }

public:
    search( const std::vector< column_info >& info, indirect_trace& trace ) : _info{ info }, _trace{ trace } {}

    bool run()
    {
        const auto root = _info.size() - 1;
        partial_assignment values( _info.size() );
        values[ root ] = truth::f;
        auto at = record( { values, step_note::root_assumption, std::nullopt, root } );
        return explore( std::move( values ), { root }, at );
    }

    const partial_assignment& open_branch() const { return _open; }
};

} // namespace

std::string_view to_string( step_note n )
{
    switch ( n ) {
    case step_note::root_assumption: return "root-assumption";
    case step_note::forced: return "forced";
    case step_note::branch_open: return "branch-open";
    case step_note::branch_closed: return "branch-closed";
    }
    return "?";
}

std::string_view to_string( indirect_outcome o )
{
    return o == indirect_outcome::tautology ? "tautology" : "falsifiable";
}

indirect_result indirect_check( const formula& f )
{
    indirect_result result{ indirect_outcome::tautology, std::nullopt, {}, { subformulas( f ), {} } };
    auto info = describe_columns( result.trace.columns );
    search s{ info, result.trace };
    if ( !s.run() )
        return result;

    result.outcome = indirect_outcome::falsifiable;
    assignment2 model;
    const auto& open = s.open_branch();
    for ( std::size_t i = 0; i < info.size(); ++i ) {
        if ( info[ i ].kind != column_info::kind::variable )
            continue;
        const auto& name = std::get< variable_node >( result.trace.columns[ i ].get() ).name;
        if ( open[ i ] )
            model.emplace( name, *open[ i ] );
    }
    for ( auto& v : variables_of( f ) )
        if ( !model.contains( v ) )
            result.unconstrained.push_back( std::move( v ) );
    result.countermodel = std::move( model );
    return result;
}

std::string render_trace( const indirect_trace& trace, syntax_config config )
{
    std::vector< std::string > header;
    std::vector< std::size_t > widths;
    for ( const auto& c : trace.columns ) {
        header.push_back( render( c, config ) );
        widths.push_back( detail::display_width( header.back() ) );
    }

    auto line = [ & ]( const std::vector< std::string >& cells, const std::string& note ) {
        std::string s;
        for ( std::size_t i = 0; i < cells.size(); ++i )
            s += detail::pad_right( cells[ i ], widths[ i ] ) + "  ";
        return s + note + "\n";
    };

    std::string out = line( header, "step" );
    for ( const auto& step : trace.steps ) {
        std::vector< std::string > cells;
        for ( const auto& v : step.values )
            cells.emplace_back( v ? value_glyph( *v, config.notation ) : "-" );
        std::string note( to_string( step.note ) );
        auto col = [ & ]( std::size_t i ) { return "column " + std::to_string( i + 1 ); };
        switch ( step.note ) {
        case step_note::root_assumption: break;
        case step_note::forced: note += " by " + col( step.source ); break;
        case step_note::branch_open:
            note += ": case " + std::to_string( step.case_number ) + " of " + std::to_string( step.case_count ) +
                    " on " + col( step.source );
            for ( std::size_t k = 0; k < step.assumed.size(); ++k )
                note += ( k == 0 ? ", assuming " : " and " ) + col( step.assumed[ k ].column ) + " = " +
                        std::string( value_glyph( step.assumed[ k ].value, config.notation ) );
            break;
        case step_note::branch_closed: note += ": " + col( *step.conflict ) + " forced both ways"; break;
        }
        out += line( cells, note );
    }
    return out;
}

} // namespace illation
