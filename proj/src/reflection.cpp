#include "softtop/reflection.hpp"

#include <algorithm>

namespace softtop {

namespace {

constexpr std::size_t enumeration_limit = 20; // quotient cells scanned by brute force

constexpr std::array< std::string_view, alpha_count > alpha_names{
    "T(0,0k)", "T(0,1)", "T(0,1k)", "T(0,2)", "T(0,3k)", "T(0,3)", "T(0,TS)", "T(0,TSk)",
};

std::vector< Mask > quotient_by_preimage( const SoftSpace& source, const SoftMapping& surjection )
{
    const Universe& q = *surjection.target();
    std::vector< Mask > opens;
    if ( q.cell_count() <= enumeration_limit )
    {
        const Mask limit = Mask{ 1 } << q.cell_count();
        for ( Mask s = 0; s < limit; ++s )
            if ( source.is_open_bits( surjection.preimage_bits( s ) ) )
                opens.push_back( s );
        return opens;
    }
    // Too many soft sets to scan. A soft set over the classes pulls back to a
    // saturated set, so the family equals the images of the saturated opens.
    for ( auto g : source.opens() )
    {
        const Mask img = surjection.image_bits( g );
        if ( surjection.preimage_bits( img ) == g )
            opens.push_back( img );
    }
    return opens;
}

bool respects_classes( const std::vector< std::vector< std::size_t > >& classes,
                       const std::vector< std::size_t >& target_class_of, const std::vector< std::size_t >& point_map )
{
    for ( const auto& cls : classes )
        for ( auto x : cls )
            if ( target_class_of[ point_map[ x ] ] != target_class_of[ point_map[ cls.front() ] ] )
                return false;
    return true;
}

} // namespace

Reflection compute_reflection( const SoftSpace& space, bool force )
{
    const bool t0u = check_axiom( space, Axiom::T0U );
    if ( !t0u && !force )
        throw NotT0U( "space is not soft T0U; the reflection is only defined inside soft T0U" );

    const Universe& u = *space.universe();
    const std::size_t n = u.point_count();
    std::vector< std::size_t > class_of( n, n );
    std::vector< std::vector< std::size_t > > classes;
    for ( std::size_t x = 0; x < n; ++x )
    {
        if ( class_of[ x ] != n )
            continue;
        class_of[ x ] = classes.size();
        classes.push_back( { x } );
        for ( std::size_t y = x + 1; y < n; ++y )
            if ( class_of[ y ] == n && approx( space, x, y ) )
            {
                class_of[ y ] = classes.size() - 1;
                classes.back().push_back( y );
            }
    }

    std::vector< std::string > labels;
    labels.reserve( classes.size() );
    for ( const auto& cls : classes )
        labels.push_back( "[" + u.points()[ cls.front() ] + "]" );
    auto quotient_universe = Universe::make( std::move( labels ), u.parameters() );

    std::vector< std::size_t > params( u.parameter_count() );
    for ( std::size_t a = 0; a < params.size(); ++a )
        params[ a ] = a;
    SoftMapping surjection{ space.universe(), quotient_universe, class_of, std::move( params ) };

    SoftSpace quotient{ SoftTopology{ quotient_universe, quotient_by_preimage( space, surjection ),
                                      SoftTopology::trusted } };

    if ( t0u )
    {
        std::vector< Mask > images;
        for ( auto g : space.opens() )
        {
            const Mask img = surjection.image_bits( g );
            if ( surjection.preimage_bits( img ) != g )
                throw InternalError( "reflection: preimage of image differs from an open set" );
            images.push_back( img );
        }
        std::sort( images.begin(), images.end() );
        images.erase( std::unique( images.begin(), images.end() ), images.end() );
        if ( images != quotient.opens() )
            throw InternalError( "reflection: image and preimage constructions of the quotient differ" );
        if ( !check_axiom( quotient, Axiom::T0 ) )
            throw InternalError( "reflection: quotient is not soft T0" );
    }

    return Reflection{ space, std::move( classes ), std::move( class_of ), std::move( quotient ),
                       std::move( surjection ), t0u };
}

SoftMapping induced_map( const Reflection& src, const Reflection& tgt, const SoftMapping& mapping )
{
    require_same_universe( mapping.source(), src.source.universe(), "induced map source" );
    require_same_universe( mapping.target(), tgt.source.universe(), "induced map target" );
    if ( !is_continuous( mapping, src.source, tgt.source ) )
        throw MappingPrecondition( "induced map: mapping is not soft continuous" );
    if ( !respects_classes( src.classes, tgt.class_of, mapping.point_map() ) )
        throw MappingPrecondition( "induced map is ill-defined: mapping sends ~-equivalent points to "
                                   "non-equivalent points" );

    std::vector< std::size_t > class_map( src.classes.size() );
    for ( std::size_t c = 0; c < class_map.size(); ++c )
        class_map[ c ] = tgt.class_of[ mapping.point_map()[ src.classes[ c ].front() ] ];
    SoftMapping induced{ src.quotient.universe(), tgt.quotient.universe(), std::move( class_map ),
                         mapping.param_map() };

    if ( !is_continuous( induced, src.quotient, tgt.quotient ) )
        throw InternalError( "induced map is not continuous" );
    if ( !( compose( tgt.surjection, mapping ) == compose( induced, src.surjection ) ) )
        throw InternalError( "induced map square does not commute" );
    return induced;
}

Factorization factor_through_reflection( const Reflection& reflection, const SoftMapping& mapping,
                                         const SoftSpace& target )
{
    require_same_universe( mapping.source(), reflection.source.universe(), "factorization source" );
    require_same_universe( mapping.target(), target.universe(), "factorization target" );
    if ( !check_axiom( target, Axiom::T0 ) )
        throw MappingPrecondition( "factorization: target is not soft T0" );
    if ( !is_continuous( mapping, reflection.source, target ) )
        throw MappingPrecondition( "factorization: mapping is not soft continuous" );

    std::vector< std::size_t > factor_points( reflection.classes.size() );
    for ( std::size_t c = 0; c < factor_points.size(); ++c )
    {
        const auto& cls = reflection.classes[ c ];
        factor_points[ c ] = mapping.point_map()[ cls.front() ];
        for ( auto x : cls )
            if ( mapping.point_map()[ x ] != factor_points[ c ] )
                throw MappingPrecondition( "factorization: mapping is not constant on the class of '"
                                           + reflection.source.universe()->points()[ cls.front() ] + "'" );
    }
    SoftMapping factor{ reflection.quotient.universe(), target.universe(), std::move( factor_points ),
                        mapping.param_map() };

    if ( !( compose( factor, reflection.surjection ) == mapping ) )
        throw InternalError( "factorization does not reproduce the mapping" );
    if ( !is_continuous( factor, reflection.quotient, target ) )
        throw InternalError( "factorization is not continuous" );
    if ( !reflection.surjection.points_surjective() )
        throw InternalError( "canonical surjection is not onto" );

    const bool open = check_map( factor, reflection.quotient, target, MapProperty::Open ).holds;
    return Factorization{ std::move( factor ), open };
}

SoftSet point_class_soft_set( const Reflection& reflection, std::size_t point )
{
    const auto& u = reflection.source.universe();
    u->check_point( point );
    Mask bits = 0;
    for ( auto y : reflection.classes[ reflection.class_of[ point ] ] )
        bits |= u->column( y );
    return SoftSet{ u, bits };
}

SoftSet point_class_soft_set( const Reflection& reflection, std::string_view point )
{
    return point_class_soft_set( reflection, reflection.source.universe()->point_index( point ) );
}

std::string_view name( Alpha alpha )
{
    return alpha_names[ static_cast< std::size_t >( alpha ) ];
}

std::optional< Alpha > parse_alpha( std::string_view text )
{
    for ( auto alpha : all_alphas )
        if ( name( alpha ) == text )
            return alpha;
    return std::nullopt;
}

Axiom axiom_for( Alpha alpha )
{
    switch ( alpha )
    {
    case Alpha::ZeroK:
        return Axiom::T0k;
    case Alpha::One:
        return Axiom::T1;
    case Alpha::OneK:
        return Axiom::T1k;
    case Alpha::Two:
        return Axiom::T2;
    case Alpha::ThreeK:
        return Axiom::T3k;
    case Alpha::Three:
        return Axiom::T3;
    case Alpha::TS:
        return Axiom::TotallySeparated;
    case Alpha::TSK:
        return Axiom::KTotallySeparated;
    }
    throw InternalError( "unhandled alpha" );
}

bool check_t0_alpha( const Reflection& reflection, Alpha alpha )
{
    if ( !reflection.verified )
        throw NotT0U( "T(0,alpha) axioms are only posed for soft T0U spaces" );
    return check_axiom( reflection.quotient, axiom_for( alpha ) );
}

bool check_t0_alpha( const SoftSpace& space, Alpha alpha )
{
    return check_t0_alpha( compute_reflection( space ), alpha );
}

namespace {

// Separation of one pair of non-equivalent points, read off the definitions
// by scanning the given family (opens, or clopens for the TS variants).
struct PairTest
{
    const Universe& u;
    const std::vector< Mask >& family;

    bool one_sided( std::size_t in, std::size_t out, bool complement ) const
    {
        return std::any_of( family.begin(), family.end(), [ & ]( Mask g ) {
            return bits::member( u, in, g ) && ( complement ? bits::excluded( u, out, g ) : !bits::member( u, out, g ) );
        } );
    }

    bool disjoint_neighbourhoods( std::size_t x, std::size_t y ) const
    {
        for ( auto g : family )
            if ( bits::member( u, x, g ) )
                for ( auto h : family )
                    if ( bits::member( u, y, h ) && ( g & h ) == 0 )
                        return true;
        return false;
    }
};

} // namespace

bool check_t0_alpha_direct( const SoftSpace& space, Alpha alpha )
{
    if ( !check_axiom( space, Axiom::T0U ) )
        throw NotT0U( "T(0,alpha) axioms are only posed for soft T0U spaces" );

    const Universe& u = *space.universe();
    const bool use_clopens = alpha == Alpha::TS || alpha == Alpha::TSK;
    const PairTest test{ u, use_clopens ? space.clopens() : space.opens() };

    auto pair_ok = [ & ]( std::size_t x, std::size_t y ) {
        switch ( alpha )
        {
        case Alpha::ZeroK:
        case Alpha::TSK:
            return test.one_sided( x, y, true ) || test.one_sided( y, x, true );
        case Alpha::One:
        case Alpha::Three:
            return test.one_sided( x, y, false ) && test.one_sided( y, x, false );
        case Alpha::OneK:
        case Alpha::ThreeK:
            return test.one_sided( x, y, true ) && test.one_sided( y, x, true );
        case Alpha::Two:
            return test.disjoint_neighbourhoods( x, y );
        case Alpha::TS:
            return test.one_sided( x, y, false ) || test.one_sided( y, x, false );
        }
        throw InternalError( "unhandled alpha" );
    };

    bool pairs = true;
    for ( std::size_t x = 0; x < u.point_count() && pairs; ++x )
        for ( std::size_t y = x + 1; y < u.point_count() && pairs; ++y )
            if ( !approx( space, x, y ) )
                pairs = pair_ok( x, y );

    if ( alpha == Alpha::OneK )
    {
        bool classes_closed = true;
        for ( std::size_t x = 0; x < u.point_count(); ++x )
        {
            Mask cls = 0;
            for ( std::size_t y = 0; y < u.point_count(); ++y )
                if ( approx( space, x, y ) )
                    cls |= u.column( y );
            classes_closed = classes_closed && space.is_closed_bits( cls );
        }
        if ( classes_closed != pairs )
            throw InternalError( "T(0,1k): pairwise and closed-class characterizations disagree" );
    }
    if ( alpha == Alpha::ThreeK )
        return pairs && check_axiom( space, Axiom::KRegular );
    if ( alpha == Alpha::Three )
        return pairs && check_axiom( space, Axiom::Regular );
    return pairs;
}

} // namespace softtop
