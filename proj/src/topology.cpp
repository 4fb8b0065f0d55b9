#include "softtop/topology.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <unordered_set>

namespace softtop {

namespace {

void sort_unique( std::vector< Mask >& masks )
{
    std::sort( masks.begin(), masks.end() );
    masks.erase( std::unique( masks.begin(), masks.end() ), masks.end() );
}

bool sorted_contains( const std::vector< Mask >& masks, Mask set )
{
    return std::binary_search( masks.begin(), masks.end(), set );
}

// All unions of the given per-cell kernels, i.e. the topology whose least
// open neighbourhood of cell c is kernels[c].
std::vector< Mask > unions_of_kernels( const std::vector< Mask >& kernels )
{
    std::vector< Mask > out{ 0 };
    std::unordered_set< Mask > seen{ 0 };
    for ( std::size_t i = 0; i < out.size(); ++i )
    {
        const Mask base = out[ i ];
        for ( std::size_t c = 0; c < kernels.size(); ++c )
        {
            if ( base >> c & 1 )
                continue;
            const Mask next = base | kernels[ c ];
            if ( seen.insert( next ).second )
                out.push_back( next );
        }
    }
    sort_unique( out );
    return out;
}

} // namespace

std::string ValidationReport::message() const
{
    switch ( status )
    {
    case Status::ok:
        return "ok";
    case Status::missing_null:
        return "family does not contain the null soft set 0_A";
    case Status::missing_absolute:
        return "family does not contain the absolute soft set 1_A";
    case Status::intersection_escapes:
        return "intersection of " + to_string( *first ) + " and " + to_string( *second ) + " = "
               + to_string( soft_intersection( *first, *second ) ) + " is not in the family";
    case Status::union_escapes:
        return "union of " + to_string( *first ) + " and " + to_string( *second ) + " = "
               + to_string( soft_union( *first, *second ) ) + " is not in the family";
    }
    return "unknown";
}

ValidationReport validate_topology( const UniversePtr& universe, const std::vector< SoftSet >& family )
{
    std::vector< Mask > members;
    std::vector< SoftSet > distinct;
    for ( const auto& set : family )
    {
        require_same_universe( universe, set.universe(), "topology member" );
        if ( std::find( members.begin(), members.end(), set.bits() ) == members.end() )
        {
            members.push_back( set.bits() );
            distinct.push_back( set );
        }
    }
    std::vector< Mask > sorted = members;
    sort_unique( sorted );

    ValidationReport report;
    if ( !sorted_contains( sorted, 0 ) )
    {
        report.status = ValidationReport::Status::missing_null;
        return report;
    }
    if ( !sorted_contains( sorted, universe->full() ) )
    {
        report.status = ValidationReport::Status::missing_absolute;
        return report;
    }
    // On a finite universe pairwise closure gives closure under all unions.
    for ( std::size_t i = 0; i < distinct.size(); ++i )
        for ( std::size_t j = i + 1; j < distinct.size(); ++j )
        {
            const Mask lhs = distinct[ i ].bits();
            const Mask rhs = distinct[ j ].bits();
            if ( !sorted_contains( sorted, lhs & rhs ) )
            {
                report.status = ValidationReport::Status::intersection_escapes;
            }
            else if ( !sorted_contains( sorted, lhs | rhs ) )
            {
                report.status = ValidationReport::Status::union_escapes;
            }
            else
            {
                continue;
            }
            report.first = distinct[ i ];
            report.second = distinct[ j ];
            return report;
        }
    return report;
}

SoftTopology SoftTopology::from_family( UniversePtr universe, const std::vector< SoftSet >& family )
{
    const auto report = validate_topology( universe, family );
    if ( !report.ok() )
        throw TopologyViolation( "not a soft topology: " + report.message() );
    std::vector< Mask > opens;
    opens.reserve( family.size() );
    for ( const auto& set : family )
        opens.push_back( set.bits() );
    return SoftTopology{ std::move( universe ), std::move( opens ), trusted };
}

SoftTopology::SoftTopology( UniversePtr universe, std::vector< Mask > opens, trusted_t )
    : _universe{ std::move( universe ) }, _opens{ std::move( opens ) }
{
    sort_unique( _opens );
}

bool SoftTopology::contains( Mask set ) const
{
    return sorted_contains( _opens, set );
}

std::vector< SoftSet > SoftTopology::open_sets() const
{
    std::vector< SoftSet > out;
    out.reserve( _opens.size() );
    for ( auto m : _opens )
        out.emplace_back( _universe, m );
    return out;
}

SoftTopology generate_topology_bits( const UniversePtr& universe, const std::vector< Mask >& family )
{
    // The generated topology has, for each cell, the least open set
    // containing it: the intersection of every generator through that cell.
    const std::size_t cells = universe->cell_count();
    std::vector< Mask > kernels( cells, universe->full() );
    for ( auto set : family )
    {
        if ( ( set & ~universe->full() ) != 0 )
            throw UniverseMismatch( "generator exceeds the universe" );
        for ( std::size_t c = 0; c < cells; ++c )
            if ( set >> c & 1 )
                kernels[ c ] &= set;
    }
    return SoftTopology{ universe, unions_of_kernels( kernels ), SoftTopology::trusted };
}

SoftTopology generate_topology( const UniversePtr& universe, const std::vector< SoftSet >& family )
{
    std::vector< Mask > masks;
    masks.reserve( family.size() );
    for ( const auto& set : family )
    {
        require_same_universe( universe, set.universe(), "generator" );
        masks.push_back( set.bits() );
    }
    return generate_topology_bits( universe, masks );
}

struct SoftSpace::impl
{
    SoftTopology topology;
    std::vector< Mask > closed;
    std::vector< Mask > clopens;
    std::vector< Mask > least_open;
    std::vector< Mask > least_clopen;
    std::vector< Mask > cell_kernel;

    mutable std::once_flag lc_once;
    mutable std::vector< Mask > locally_closed;

    explicit impl( SoftTopology t ) : topology{ std::move( t ) }
    {
        const Universe& u = *topology.universe();
        const Mask full = u.full();
        const auto& opens = topology.opens();

        closed.reserve( opens.size() );
        for ( auto g : opens )
            closed.push_back( full & ~g );
        sort_unique( closed );

        for ( auto g : opens )
            if ( sorted_contains( closed, g ) )
                clopens.push_back( g );

        cell_kernel.assign( u.cell_count(), full );
        for ( auto g : opens )
            for ( Mask rest = g; rest; rest &= rest - 1 )
                cell_kernel[ std::size_t( std::countr_zero( rest ) ) ] &= g;

        least_open.assign( u.point_count(), full );
        least_clopen.assign( u.point_count(), full );
        for ( std::size_t x = 0; x < u.point_count(); ++x )
        {
            for ( auto g : opens )
                if ( bits::member( u, x, g ) )
                    least_open[ x ] &= g;
            for ( auto g : clopens )
                if ( bits::member( u, x, g ) )
                    least_clopen[ x ] &= g;
        }
    }
};

SoftSpace::SoftSpace( SoftTopology topology ) : _impl{ std::make_shared< const impl >( std::move( topology ) ) } {}

const UniversePtr& SoftSpace::universe() const { return _impl->topology.universe(); }
const SoftTopology& SoftSpace::topology() const { return _impl->topology; }
const std::vector< Mask >& SoftSpace::opens() const { return _impl->topology.opens(); }
const std::vector< Mask >& SoftSpace::closed() const { return _impl->closed; }
const std::vector< Mask >& SoftSpace::clopens() const { return _impl->clopens; }

const std::vector< Mask >& SoftSpace::locally_closed() const
{
    std::call_once( _impl->lc_once, [ this ] {
        std::vector< Mask > out;
        out.reserve( opens().size() * closed().size() );
        for ( auto g : opens() )
            for ( auto c : closed() )
                out.push_back( g & c );
        sort_unique( out );
        _impl->locally_closed = std::move( out );
    } );
    return _impl->locally_closed;
}

bool SoftSpace::is_open_bits( Mask set ) const { return sorted_contains( opens(), set ); }
bool SoftSpace::is_closed_bits( Mask set ) const { return sorted_contains( closed(), set ); }

Mask SoftSpace::least_open( std::size_t point ) const
{
    universe()->check_point( point );
    return _impl->least_open[ point ];
}

Mask SoftSpace::least_open_superset( Mask set ) const
{
    Mask out = 0;
    for ( Mask rest = set; rest; rest &= rest - 1 )
        out |= _impl->cell_kernel[ std::size_t( std::countr_zero( rest ) ) ];
    return out;
}

Mask SoftSpace::least_clopen( std::size_t point ) const
{
    universe()->check_point( point );
    return _impl->least_clopen[ point ];
}

SoftSpace make_space( const UniversePtr& universe, const std::vector< SoftSet >& family )
{
    return SoftSpace{ SoftTopology::from_family( universe, family ) };
}

SoftSpace subspace_bits( const SoftSpace& space, Mask points )
{
    const Universe& u = *space.universe();
    std::vector< std::size_t > kept;
    std::vector< std::string > labels;
    for ( std::size_t x = 0; x < u.point_count(); ++x )
        if ( points >> x & 1 )
        {
            kept.push_back( x );
            labels.push_back( u.points()[ x ] );
        }
    if ( kept.empty() )
        throw Error( "subspace point set must be nonempty" );
    if ( points >> u.point_count() != 0 )
        throw UnknownLabel( "subspace point set exceeds the universe" );

    auto sub = Universe::make( std::move( labels ), u.parameters() );
    std::vector< Mask > opens;
    opens.reserve( space.opens().size() );
    for ( auto g : space.opens() )
        opens.push_back( bits::restrict_to( u, kept, g ) );
    return SoftSpace{ SoftTopology{ std::move( sub ), std::move( opens ), SoftTopology::trusted } };
}

SoftSpace subspace( const SoftSpace& space, const std::vector< std::string >& points )
{
    if ( points.empty() )
        throw Error( "subspace point set must be nonempty" );
    Mask selected = 0;
    for ( const auto& label : points )
        selected |= Mask{ 1 } << space.universe()->point_index( label );
    return subspace_bits( space, selected );
}

bool is_open( const SoftSpace& space, const SoftSet& set )
{
    require_same_universe( space.universe(), set.universe(), "is_open" );
    return space.is_open_bits( set.bits() );
}

bool is_closed( const SoftSpace& space, const SoftSet& set )
{
    require_same_universe( space.universe(), set.universe(), "is_closed" );
    return space.is_closed_bits( set.bits() );
}

bool is_clopen( const SoftSpace& space, const SoftSet& set )
{
    return is_open( space, set ) && is_closed( space, set );
}

std::vector< SoftSet > neighborhoods( const SoftSpace& space, std::size_t point )
{
    const Universe& u = *space.universe();
    u.check_point( point );
    std::vector< SoftSet > out;
    for ( auto g : space.opens() )
        if ( bits::member( u, point, g ) )
            out.emplace_back( space.universe(), g );
    return out;
}

std::vector< SoftSet > neighborhoods( const SoftSpace& space, std::string_view point )
{
    return neighborhoods( space, space.universe()->point_index( point ) );
}

Mask closure_bits( const SoftSpace& space, Mask set )
{
    Mask out = space.universe()->full();
    for ( auto c : space.closed() )
        if ( bits::subset( set, c ) )
            out &= c;
    return out;
}

Mask interior_bits( const SoftSpace& space, Mask set )
{
    Mask out = 0;
    for ( auto g : space.opens() )
        if ( bits::subset( g, set ) )
            out |= g;
    return out;
}

SoftSet closure( const SoftSpace& space, const SoftSet& set )
{
    require_same_universe( space.universe(), set.universe(), "closure" );
    return SoftSet{ space.universe(), closure_bits( space, set.bits() ) };
}

SoftSet interior( const SoftSpace& space, const SoftSet& set )
{
    require_same_universe( space.universe(), set.universe(), "interior" );
    return SoftSet{ space.universe(), interior_bits( space, set.bits() ) };
}

bool approx( const SoftSpace& space, std::size_t x, std::size_t y )
{
    const Universe& u = *space.universe();
    u.check_point( x );
    u.check_point( y );
    return bits::member( u, y, space.least_open( x ) ) && bits::member( u, x, space.least_open( y ) );
}

bool approx( const SoftSpace& space, std::string_view x, std::string_view y )
{
    const Universe& u = *space.universe();
    return approx( space, u.point_index( x ), u.point_index( y ) );
}

bool is_locally_closed( const SoftSpace& space, const SoftSet& set )
{
    require_same_universe( space.universe(), set.universe(), "is_locally_closed" );
    return sorted_contains( space.locally_closed(), set.bits() );
}

ClosurePointReport check_closure_points( const SoftSpace& space )
{
    const Universe& u = *space.universe();
    if ( u.cell_count() > 20 )
        throw Error( "closure point scan needs at most 20 cells" );
    ClosurePointReport report;
    const Mask limit = Mask{ 1 } << u.cell_count();
    for ( Mask s = 0; s < limit; ++s )
    {
        const Mask cl = closure_bits( space, s );
        for ( std::size_t x = 0; x < u.point_count(); ++x )
        {
            const bool meets_all = std::all_of( space.opens().begin(), space.opens().end(), [ & ]( Mask g ) {
                return !bits::member( u, x, g ) || ( g & s ) != 0;
            } );
            const bool in_closure = bits::member( u, x, cl );
            if ( in_closure && !meets_all && report.forward )
            {
                report.forward = false;
                report.forward_witness = SoftSet{ space.universe(), s };
            }
            if ( !in_closure && meets_all && report.converse )
            {
                report.converse = false;
                report.converse_witness = SoftSet{ space.universe(), s };
                report.converse_point = x;
            }
        }
    }
    return report;
}

} // namespace softtop
