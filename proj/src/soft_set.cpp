#include "softtop/soft_set.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace softtop {

namespace {

void require_unique( const std::vector< std::string >& labels, std::string_view what )
{
    if ( labels.empty() )
        throw Error( std::string( what ) + " list must be nonempty" );
    std::set< std::string_view > seen;
    for ( const auto& label : labels )
        if ( !seen.insert( label ).second )
            throw Error( "duplicate " + std::string( what ) + " label '" + label + "'" );
}

std::optional< std::size_t > find_label( const std::vector< std::string >& labels, std::string_view label )
{
    const auto it = std::find( labels.begin(), labels.end(), label );
    if ( it == labels.end() )
        return std::nullopt;
    return static_cast< std::size_t >( it - labels.begin() );
}

} // namespace

Universe::Universe( std::vector< std::string > points, std::vector< std::string > parameters )
    : _points{ std::move( points ) }, _parameters{ std::move( parameters ) }
{
    require_unique( _points, "point" );
    require_unique( _parameters, "parameter" );
    if ( cell_count() > max_cells )
        throw Error( "universe has " + std::to_string( cell_count() ) + " cells; at most "
                     + std::to_string( max_cells ) + " are supported" );

    _row_mask = _points.size() == 64 ? ~Mask{ 0 } : ( Mask{ 1 } << _points.size() ) - 1;
    _full = cell_count() == 64 ? ~Mask{ 0 } : ( Mask{ 1 } << cell_count() ) - 1;
    _columns.assign( _points.size(), 0 );
    for ( std::size_t x = 0; x < _points.size(); ++x )
        for ( std::size_t a = 0; a < _parameters.size(); ++a )
            _columns[ x ] |= Mask{ 1 } << cell( x, a );
}

std::shared_ptr< const Universe > Universe::make( std::vector< std::string > points,
                                                  std::vector< std::string > parameters )
{
    return std::make_shared< const Universe >( std::move( points ), std::move( parameters ) );
}

std::optional< std::size_t > Universe::find_point( std::string_view label ) const
{
    return find_label( _points, label );
}

std::optional< std::size_t > Universe::find_parameter( std::string_view label ) const
{
    return find_label( _parameters, label );
}

std::size_t Universe::point_index( std::string_view label ) const
{
    if ( auto idx = find_point( label ) )
        return *idx;
    throw UnknownLabel( "unknown point '" + std::string( label ) + "'" );
}

std::size_t Universe::parameter_index( std::string_view label ) const
{
    if ( auto idx = find_parameter( label ) )
        return *idx;
    throw UnknownLabel( "unknown parameter '" + std::string( label ) + "'" );
}

Mask Universe::row( std::size_t parameter ) const
{
    return _row_mask << ( parameter * _points.size() );
}

void Universe::check_point( std::size_t point ) const
{
    if ( point >= _points.size() )
        throw UnknownLabel( "point index " + std::to_string( point ) + " out of range" );
}

void Universe::check_parameter( std::size_t parameter ) const
{
    if ( parameter >= _parameters.size() )
        throw UnknownLabel( "parameter index " + std::to_string( parameter ) + " out of range" );
}

bool same_universe( const UniversePtr& lhs, const UniversePtr& rhs )
{
    return lhs == rhs || ( lhs && rhs && *lhs == *rhs );
}

void require_same_universe( const UniversePtr& lhs, const UniversePtr& rhs, std::string_view what )
{
    if ( !same_universe( lhs, rhs ) )
        throw UniverseMismatch( std::string( what ) + ": operands live over different universes" );
}

UniversePtr sub_universe( const Universe& universe, const std::vector< std::string >& kept )
{
    if ( kept.empty() )
        throw Error( "subspace point set must be nonempty" );
    std::vector< bool > keep( universe.point_count(), false );
    for ( const auto& label : kept )
        keep[ universe.point_index( label ) ] = true;
    std::vector< std::string > points;
    for ( std::size_t x = 0; x < universe.point_count(); ++x )
        if ( keep[ x ] )
            points.push_back( universe.points()[ x ] );
    return Universe::make( std::move( points ), universe.parameters() );
}

namespace bits {

Mask restrict_to( const Universe& from, const std::vector< std::size_t >& kept, Mask set )
{
    Mask out = 0;
    const std::size_t width = kept.size();
    for ( std::size_t a = 0; a < from.parameter_count(); ++a )
        for ( std::size_t i = 0; i < width; ++i )
            if ( set >> from.cell( kept[ i ], a ) & 1 )
                out |= Mask{ 1 } << ( a * width + i );
    return out;
}

} // namespace bits

SoftSet::SoftSet( UniversePtr universe, Mask bits ) : _universe{ std::move( universe ) }, _bits{ bits }
{
    if ( !_universe )
        throw Error( "soft set needs a universe" );
    if ( ( _bits & ~_universe->full() ) != 0 )
        throw Error( "soft set bits exceed the universe" );
}

SoftSet SoftSet::null( UniversePtr universe )
{
    return SoftSet{ std::move( universe ), 0 };
}

SoftSet SoftSet::absolute( UniversePtr universe )
{
    const Mask full = universe->full();
    return SoftSet{ std::move( universe ), full };
}

SoftSet SoftSet::from_rows( UniversePtr universe, const std::vector< std::vector< std::string > >& rows )
{
    if ( rows.size() != universe->parameter_count() )
        throw Error( "expected one row per parameter (" + std::to_string( universe->parameter_count() )
                     + "), got " + std::to_string( rows.size() ) );
    Mask bits = 0;
    for ( std::size_t a = 0; a < rows.size(); ++a )
        for ( const auto& label : rows[ a ] )
            bits |= Mask{ 1 } << universe->cell( universe->point_index( label ), a );
    return SoftSet{ std::move( universe ), bits };
}

SoftSet SoftSet::from_map( UniversePtr universe, const std::map< std::string, std::vector< std::string > >& rows )
{
    Mask bits = 0;
    for ( const auto& [ param, labels ] : rows )
    {
        const std::size_t a = universe->parameter_index( param );
        for ( const auto& label : labels )
            bits |= Mask{ 1 } << universe->cell( universe->point_index( label ), a );
    }
    return SoftSet{ std::move( universe ), bits };
}

Mask SoftSet::row( std::size_t parameter ) const
{
    _universe->check_parameter( parameter );
    return ( _bits & _universe->row( parameter ) ) >> ( parameter * _universe->point_count() );
}

std::vector< std::string > SoftSet::row_labels( std::size_t parameter ) const
{
    std::vector< std::string > out;
    const Mask r = row( parameter );
    for ( std::size_t x = 0; x < _universe->point_count(); ++x )
        if ( r >> x & 1 )
            out.push_back( _universe->points()[ x ] );
    return out;
}

std::string to_string( const SoftSet& set )
{
    std::ostringstream os;
    os << '<';
    for ( std::size_t a = 0; a < set.universe()->parameter_count(); ++a )
    {
        if ( a )
            os << ',';
        os << '{';
        bool first = true;
        for ( const auto& label : set.row_labels( a ) )
        {
            os << ( first ? "" : "," ) << label;
            first = false;
        }
        os << '}';
    }
    os << '>';
    return os.str();
}

SoftSet complement( const SoftSet& set )
{
    return SoftSet{ set.universe(), set.universe()->full() & ~set.bits() };
}

SoftSet soft_union( const SoftSet& lhs, const SoftSet& rhs )
{
    require_same_universe( lhs.universe(), rhs.universe(), "union" );
    return SoftSet{ lhs.universe(), lhs.bits() | rhs.bits() };
}

SoftSet soft_intersection( const SoftSet& lhs, const SoftSet& rhs )
{
    require_same_universe( lhs.universe(), rhs.universe(), "intersection" );
    return SoftSet{ lhs.universe(), lhs.bits() & rhs.bits() };
}

SoftSet soft_difference( const SoftSet& lhs, const SoftSet& rhs )
{
    require_same_universe( lhs.universe(), rhs.universe(), "difference" );
    return SoftSet{ lhs.universe(), lhs.bits() & ~rhs.bits() };
}

bool is_subset( const SoftSet& lhs, const SoftSet& rhs )
{
    require_same_universe( lhs.universe(), rhs.universe(), "subset" );
    return bits::subset( lhs.bits(), rhs.bits() );
}

bool equals( const SoftSet& lhs, const SoftSet& rhs )
{
    return is_subset( lhs, rhs ) && is_subset( rhs, lhs );
}

bool is_disjoint( const SoftSet& lhs, const SoftSet& rhs )
{
    require_same_universe( lhs.universe(), rhs.universe(), "disjoint" );
    return ( lhs.bits() & rhs.bits() ) == 0;
}

bool member( std::size_t point, const SoftSet& set )
{
    set.universe()->check_point( point );
    return bits::member( *set.universe(), point, set.bits() );
}

bool member( std::string_view point, const SoftSet& set )
{
    return member( set.universe()->point_index( point ), set );
}

bool member_at( std::size_t point, std::size_t parameter, const SoftSet& set )
{
    const Universe& u = *set.universe();
    u.check_point( point );
    u.check_parameter( parameter );
    return set.bits() >> u.cell( point, parameter ) & 1;
}

bool member_at( std::string_view point, std::string_view parameter, const SoftSet& set )
{
    const Universe& u = *set.universe();
    return member_at( u.point_index( point ), u.parameter_index( parameter ), set );
}

SoftSet point_soft_set( std::size_t point, const UniversePtr& universe )
{
    universe->check_point( point );
    return SoftSet{ universe, universe->column( point ) };
}

SoftSet point_soft_set( std::string_view point, const UniversePtr& universe )
{
    return point_soft_set( universe->point_index( point ), universe );
}

SoftSet restrict_to( const SoftSet& set, const UniversePtr& sub )
{
    const Universe& from = *set.universe();
    if ( sub->parameters() != from.parameters() )
        throw UniverseMismatch( "restriction: sub-universe must keep the same parameters" );
    std::vector< std::size_t > kept;
    kept.reserve( sub->point_count() );
    for ( const auto& label : sub->points() )
        kept.push_back( from.point_index( label ) );
    if ( !std::is_sorted( kept.begin(), kept.end() ) )
        throw UniverseMismatch( "restriction: sub-universe must preserve point order" );
    return SoftSet{ sub, bits::restrict_to( from, kept, set.bits() ) };
}

SoftSet restrict_to( const SoftSet& set, const std::vector< std::string >& points )
{
    return restrict_to( set, sub_universe( *set.universe(), points ) );
}

SoftMapping::SoftMapping( UniversePtr source, UniversePtr target, std::vector< std::size_t > point_map,
                          std::vector< std::size_t > param_map )
    : _source{ std::move( source ) }, _target{ std::move( target ) }, _point_map{ std::move( point_map ) },
      _param_map{ std::move( param_map ) }
{
    if ( !_source || !_target )
        throw Error( "soft mapping needs source and target universes" );
    if ( _point_map.size() != _source->point_count() )
        throw Error( "point map must be total on the source points" );
    if ( _param_map.size() != _source->parameter_count() )
        throw Error( "parameter map must be total on the source parameters" );
    for ( auto y : _point_map )
        _target->check_point( y );
    for ( auto b : _param_map )
        _target->check_parameter( b );

    _cell_target.resize( _source->cell_count() );
    for ( std::size_t a = 0; a < _param_map.size(); ++a )
        for ( std::size_t x = 0; x < _point_map.size(); ++x )
            _cell_target[ _source->cell( x, a ) ]
                = static_cast< std::uint8_t >( _target->cell( _point_map[ x ], _param_map[ a ] ) );
}

SoftMapping SoftMapping::identity( const UniversePtr& universe )
{
    std::vector< std::size_t > points( universe->point_count() );
    std::vector< std::size_t > params( universe->parameter_count() );
    for ( std::size_t i = 0; i < points.size(); ++i )
        points[ i ] = i;
    for ( std::size_t i = 0; i < params.size(); ++i )
        params[ i ] = i;
    return SoftMapping{ universe, universe, std::move( points ), std::move( params ) };
}

SoftMapping SoftMapping::from_labels( UniversePtr source, UniversePtr target,
                                      const std::map< std::string, std::string >& point_map,
                                      const std::map< std::string, std::string >& param_map )
{
    std::vector< std::size_t > points( source->point_count() );
    std::vector< bool > seen_points( points.size(), false );
    for ( const auto& [ from, to ] : point_map )
    {
        const std::size_t x = source->point_index( from );
        points[ x ] = target->point_index( to );
        seen_points[ x ] = true;
    }
    std::vector< std::size_t > params( source->parameter_count() );
    std::vector< bool > seen_params( params.size(), false );
    for ( const auto& [ from, to ] : param_map )
    {
        const std::size_t a = source->parameter_index( from );
        params[ a ] = target->parameter_index( to );
        seen_params[ a ] = true;
    }
    for ( std::size_t x = 0; x < seen_points.size(); ++x )
        if ( !seen_points[ x ] )
            throw Error( "point map is not total: '" + source->points()[ x ] + "' unmapped" );
    for ( std::size_t a = 0; a < seen_params.size(); ++a )
        if ( !seen_params[ a ] )
            throw Error( "parameter map is not total: '" + source->parameters()[ a ] + "' unmapped" );
    return SoftMapping{ std::move( source ), std::move( target ), std::move( points ), std::move( params ) };
}

namespace {

bool injective( const std::vector< std::size_t >& map )
{
    std::vector< std::size_t > sorted = map;
    std::sort( sorted.begin(), sorted.end() );
    return std::adjacent_find( sorted.begin(), sorted.end() ) == sorted.end();
}

bool surjective( const std::vector< std::size_t >& map, std::size_t codomain )
{
    std::vector< bool > hit( codomain, false );
    for ( auto v : map )
        hit[ v ] = true;
    return std::all_of( hit.begin(), hit.end(), []( bool b ) { return b; } );
}

} // namespace

bool SoftMapping::points_injective() const { return injective( _point_map ); }
bool SoftMapping::points_surjective() const { return surjective( _point_map, _target->point_count() ); }
bool SoftMapping::params_injective() const { return injective( _param_map ); }
bool SoftMapping::params_surjective() const { return surjective( _param_map, _target->parameter_count() ); }

Mask SoftMapping::image_bits( Mask set ) const
{
    Mask out = 0;
    for ( std::size_t c = 0; c < _cell_target.size(); ++c )
        if ( set >> c & 1 )
            out |= Mask{ 1 } << _cell_target[ c ];
    return out;
}

Mask SoftMapping::preimage_bits( Mask set ) const
{
    Mask out = 0;
    for ( std::size_t c = 0; c < _cell_target.size(); ++c )
        if ( set >> _cell_target[ c ] & 1 )
            out |= Mask{ 1 } << c;
    return out;
}

SoftSet image( const SoftMapping& mapping, const SoftSet& set )
{
    require_same_universe( mapping.source(), set.universe(), "image" );
    return SoftSet{ mapping.target(), mapping.image_bits( set.bits() ) };
}

SoftSet preimage( const SoftMapping& mapping, const SoftSet& set )
{
    require_same_universe( mapping.target(), set.universe(), "preimage" );
    return SoftSet{ mapping.source(), mapping.preimage_bits( set.bits() ) };
}

SoftMapping compose( const SoftMapping& second, const SoftMapping& first )
{
    require_same_universe( first.target(), second.source(), "composition" );
    std::vector< std::size_t > points( first.point_map().size() );
    std::vector< std::size_t > params( first.param_map().size() );
    for ( std::size_t x = 0; x < points.size(); ++x )
        points[ x ] = second.point_map()[ first.point_map()[ x ] ];
    for ( std::size_t a = 0; a < params.size(); ++a )
        params[ a ] = second.param_map()[ first.param_map()[ a ] ];
    return SoftMapping{ first.source(), second.target(), std::move( points ), std::move( params ) };
}

} // namespace softtop
