#include "softtop/separation.hpp"

#include <algorithm>

namespace softtop {

namespace {

constexpr std::array< std::string_view, axiom_count > axiom_names{
    "T0", "T0U", "T1", "T2", "Regular", "T3", "T0k", "T1k", "KRegular", "T3k", "TotallySeparated", "KTotallySeparated",
};

template < typename Pred >
bool all_distinct_pairs( std::size_t n, Pred pred )
{
    for ( std::size_t x = 0; x < n; ++x )
        for ( std::size_t y = x + 1; y < n; ++y )
            if ( !pred( x, y ) )
                return false;
    return true;
}

bool t0( const SoftSpace& sp )
{
    const Universe& u = *sp.universe();
    return all_distinct_pairs( u.point_count(), [ & ]( std::size_t x, std::size_t y ) {
        return !bits::member( u, y, sp.least_open( x ) ) || !bits::member( u, x, sp.least_open( y ) );
    } );
}

bool t0u( const SoftSpace& sp )
{
    const Universe& u = *sp.universe();
    return all_distinct_pairs( u.point_count(), [ & ]( std::size_t x, std::size_t y ) {
        if ( !approx( sp, x, y ) )
            return true;
        for ( auto g : sp.opens() )
            for ( std::size_t a = 0; a < u.parameter_count(); ++a )
                if ( ( g >> u.cell( x, a ) & 1 ) != ( g >> u.cell( y, a ) & 1 ) )
                    return false;
        return true;
    } );
}

bool t1( const SoftSpace& sp )
{
    const Universe& u = *sp.universe();
    return all_distinct_pairs( u.point_count(), [ & ]( std::size_t x, std::size_t y ) {
        return !bits::member( u, y, sp.least_open( x ) ) && !bits::member( u, x, sp.least_open( y ) );
    } );
}

bool t2( const SoftSpace& sp )
{
    return all_distinct_pairs( sp.universe()->point_count(), [ & ]( std::size_t x, std::size_t y ) {
        return ( sp.least_open( x ) & sp.least_open( y ) ) == 0;
    } );
}

bool t0k( const SoftSpace& sp )
{
    const Universe& u = *sp.universe();
    return all_distinct_pairs( u.point_count(), [ & ]( std::size_t x, std::size_t y ) {
        return bits::excluded( u, y, sp.least_open( x ) ) || bits::excluded( u, x, sp.least_open( y ) );
    } );
}

bool t1k( const SoftSpace& sp )
{
    const Universe& u = *sp.universe();
    return all_distinct_pairs( u.point_count(), [ & ]( std::size_t x, std::size_t y ) {
        return bits::excluded( u, y, sp.least_open( x ) ) && bits::excluded( u, x, sp.least_open( y ) );
    } );
}

// Regular (k = false) or k-regular (k = true). For a closed F the best
// candidate for H is the least open superset of F; a separating G exists iff
// the least open neighbourhood of x misses it.
bool regular( const SoftSpace& sp, bool k )
{
    const Universe& u = *sp.universe();
    for ( auto f : sp.closed() )
    {
        const Mask least_superset = sp.least_open_superset( f );
        for ( std::size_t x = 0; x < u.point_count(); ++x )
        {
            const bool triggered = k ? bits::excluded( u, x, f ) : !bits::member( u, x, f );
            if ( triggered && ( sp.least_open( x ) & least_superset ) != 0 )
                return false;
        }
    }
    return true;
}

bool totally_separated( const SoftSpace& sp )
{
    const Universe& u = *sp.universe();
    return all_distinct_pairs( u.point_count(), [ & ]( std::size_t x, std::size_t y ) {
        return !bits::member( u, y, sp.least_clopen( x ) ) || !bits::member( u, x, sp.least_clopen( y ) );
    } );
}

// The second disjunct is read symmetrically: y in (G, A) and x in (G, A)^c.
bool k_totally_separated( const SoftSpace& sp )
{
    const Universe& u = *sp.universe();
    return all_distinct_pairs( u.point_count(), [ & ]( std::size_t x, std::size_t y ) {
        return bits::excluded( u, y, sp.least_clopen( x ) ) || bits::excluded( u, x, sp.least_clopen( y ) );
    } );
}

} // namespace

std::string_view name( Axiom axiom )
{
    return axiom_names[ static_cast< std::size_t >( axiom ) ];
}

std::optional< Axiom > parse_axiom( std::string_view text )
{
    if ( text == "TS" )
        return Axiom::TotallySeparated;
    if ( text == "KTS" )
        return Axiom::KTotallySeparated;
    for ( auto axiom : all_axioms )
        if ( name( axiom ) == text )
            return axiom;
    return std::nullopt;
}

bool check_axiom( const SoftSpace& space, Axiom axiom )
{
    switch ( axiom )
    {
    case Axiom::T0:
        return t0( space );
    case Axiom::T0U:
        return t0u( space );
    case Axiom::T1:
        return t1( space );
    case Axiom::T2:
        return t2( space );
    case Axiom::Regular:
        return regular( space, false );
    case Axiom::T3:
        return regular( space, false ) && t1( space );
    case Axiom::T0k:
        return t0k( space );
    case Axiom::T1k:
        return t1k( space );
    case Axiom::KRegular:
        return regular( space, true );
    case Axiom::T3k:
        return regular( space, true ) && t1k( space );
    case Axiom::TotallySeparated:
        return totally_separated( space );
    case Axiom::KTotallySeparated:
        return k_totally_separated( space );
    }
    throw InternalError( "unhandled axiom" );
}

bool is_point_class_closed( const SoftSpace& space, std::size_t point )
{
    space.universe()->check_point( point );
    return space.is_closed_bits( space.universe()->column( point ) );
}

bool is_point_class_closed( const SoftSpace& space, std::string_view point )
{
    return is_point_class_closed( space, space.universe()->point_index( point ) );
}

bool t1k_via_closed_points( const SoftSpace& space )
{
    for ( std::size_t x = 0; x < space.universe()->point_count(); ++x )
        if ( !is_point_class_closed( space, x ) )
            return false;
    return true;
}

std::optional< Implication > AxiomProfile::first_inconsistency() const
{
    for ( const auto& imp : proven_implications )
        if ( ( *this )[ imp.from ] && !( *this )[ imp.to ] )
            return imp;
    return std::nullopt;
}

AxiomProfile classify( const SoftSpace& space, std::string space_id )
{
    std::array< bool, axiom_count > values{};
    const bool reg = regular( space, false );
    const bool kreg = regular( space, true );
    const bool sep1 = t1( space );
    const bool sep1k = t1k( space );
    values[ static_cast< std::size_t >( Axiom::T0 ) ] = t0( space );
    values[ static_cast< std::size_t >( Axiom::T0U ) ] = t0u( space );
    values[ static_cast< std::size_t >( Axiom::T1 ) ] = sep1;
    values[ static_cast< std::size_t >( Axiom::T2 ) ] = t2( space );
    values[ static_cast< std::size_t >( Axiom::Regular ) ] = reg;
    values[ static_cast< std::size_t >( Axiom::T3 ) ] = reg && sep1;
    values[ static_cast< std::size_t >( Axiom::T0k ) ] = t0k( space );
    values[ static_cast< std::size_t >( Axiom::T1k ) ] = sep1k;
    values[ static_cast< std::size_t >( Axiom::KRegular ) ] = kreg;
    values[ static_cast< std::size_t >( Axiom::T3k ) ] = kreg && sep1k;
    values[ static_cast< std::size_t >( Axiom::TotallySeparated ) ] = totally_separated( space );
    values[ static_cast< std::size_t >( Axiom::KTotallySeparated ) ] = k_totally_separated( space );

    if ( sep1k != t1k_via_closed_points( space ) )
        throw InternalError( "soft T1k routes disagree" );
    AxiomProfile profile{ std::move( space_id ), values };
    if ( auto bad = profile.first_inconsistency() )
        throw InternalError( "profile breaks " + std::string( name( bad->from ) ) + " => "
                             + std::string( name( bad->to ) ) );
    return profile;
}

} // namespace softtop
