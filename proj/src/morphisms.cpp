#include "softtop/morphisms.hpp"

#include <algorithm>

namespace softtop {

namespace {

constexpr std::array< std::string_view, map_property_count > property_names{
    "Continuous", "Open", "Closed", "Initial", "InitialViaClosure", "Quasihomomorphism",
    "Injective", "Surjective", "Homeomorphism",
};

void require_between( const SoftMapping& m, const SoftSpace& dom, const SoftSpace& cod )
{
    require_same_universe( m.source(), dom.universe(), "mapping source vs domain" );
    require_same_universe( m.target(), cod.universe(), "mapping target vs codomain" );
}

// Each returns the first offending soft set, or nullopt when the property holds.

std::optional< Mask > continuity_failure( const SoftMapping& m, const SoftSpace& dom, const SoftSpace& cod )
{
    for ( auto g : cod.opens() )
        if ( !dom.is_open_bits( m.preimage_bits( g ) ) )
            return g;
    return std::nullopt;
}

std::optional< Mask > openness_failure( const SoftMapping& m, const SoftSpace& dom, const SoftSpace& cod )
{
    for ( auto f : dom.opens() )
        if ( !cod.is_open_bits( m.image_bits( f ) ) )
            return f;
    return std::nullopt;
}

std::optional< Mask > closedness_failure( const SoftMapping& m, const SoftSpace& dom, const SoftSpace& cod )
{
    for ( auto f : dom.closed() )
        if ( !cod.is_closed_bits( m.image_bits( f ) ) )
            return f;
    return std::nullopt;
}

// Assumes continuity: every preimage of a codomain open is open in dom, so
// initiality means the preimages cover all of dom's opens.
std::optional< Mask > initial_failure( const SoftMapping& m, const SoftSpace& dom, const SoftSpace& cod )
{
    std::vector< Mask > pulled;
    pulled.reserve( cod.opens().size() );
    for ( auto g : cod.opens() )
        pulled.push_back( m.preimage_bits( g ) );
    std::sort( pulled.begin(), pulled.end() );
    for ( auto f : dom.opens() )
        if ( !std::binary_search( pulled.begin(), pulled.end(), f ) )
            return f;
    return std::nullopt;
}

std::optional< Mask > closure_characterization_failure( const SoftMapping& m, const SoftSpace& dom,
                                                        const SoftSpace& cod )
{
    for ( auto f : dom.closed() )
        if ( m.preimage_bits( closure_bits( cod, m.image_bits( f ) ) ) != f )
            return f;
    return std::nullopt;
}

std::optional< Mask > meeting_failure( const SoftMapping& m, const SoftSpace& dom, const SoftSpace& cod )
{
    const Mask covered = m.image_bits( dom.universe()->full() );
    for ( auto l : cod.locally_closed() )
        if ( l != 0 && ( l & covered ) == 0 )
            return l;
    return std::nullopt;
}

PropertyCheck fail_with( const UniversePtr& u, Mask set, std::string detail )
{
    return PropertyCheck{ false, { SoftSet{ u, set } }, std::move( detail ) };
}

PropertyCheck decide( const SoftMapping& m, const SoftSpace& dom, const SoftSpace& cod, MapProperty p )
{
    const auto& du = dom.universe();
    const auto& cu = cod.universe();
    auto continuity_gate = [ & ]() -> std::optional< PropertyCheck > {
        if ( auto bad = continuity_failure( m, dom, cod ) )
            return fail_with( cu, *bad, "not continuous: preimage of this open set is not open" );
        return std::nullopt;
    };

    switch ( p )
    {
    case MapProperty::Continuous:
        if ( auto gate = continuity_gate() )
            return *gate;
        return {};
    case MapProperty::Open:
        if ( auto bad = openness_failure( m, dom, cod ) )
            return fail_with( du, *bad, "image of this open set is not open" );
        return {};
    case MapProperty::Closed:
        if ( auto bad = closedness_failure( m, dom, cod ) )
            return fail_with( du, *bad, "image of this closed set is not closed" );
        return {};
    case MapProperty::Initial:
        if ( auto gate = continuity_gate() )
            return *gate;
        if ( auto bad = initial_failure( m, dom, cod ) )
            return fail_with( du, *bad, "open set is not the preimage of any codomain open" );
        return {};
    case MapProperty::InitialViaClosure:
        if ( auto gate = continuity_gate() )
            return *gate;
        if ( auto bad = closure_characterization_failure( m, dom, cod ) )
            return fail_with( du, *bad, "closed set differs from the preimage of the closure of its image" );
        return {};
    case MapProperty::Quasihomomorphism:
        if ( auto gate = continuity_gate() )
            return *gate;
        if ( auto bad = initial_failure( m, dom, cod ) )
            return fail_with( du, *bad, "not initial: open set is not the preimage of any codomain open" );
        if ( auto bad = meeting_failure( m, dom, cod ) )
            return fail_with( cu, *bad, "image of 1_A misses this nonnull locally closed set" );
        return {};
    case MapProperty::Injective:
        if ( !m.is_injective() )
            return PropertyCheck{ false, {}, m.points_injective() ? "parameter map is not injective"
                                                                   : "point map is not injective" };
        return {};
    case MapProperty::Surjective:
        if ( !m.is_surjective() )
            return PropertyCheck{ false, {}, m.points_surjective() ? "parameter map is not surjective"
                                                                    : "point map is not surjective" };
        return {};
    case MapProperty::Homeomorphism:
        if ( !m.is_injective() || !m.is_surjective() )
            return PropertyCheck{ false, {}, "not bijective" };
        if ( auto gate = continuity_gate() )
            return *gate;
        // For a bijection the inverse pulls back U to the image of U.
        if ( auto bad = openness_failure( m, dom, cod ) )
            return fail_with( du, *bad, "inverse not continuous: image of this open set is not open" );
        return {};
    }
    throw InternalError( "unhandled map property" );
}

} // namespace

std::string_view name( MapProperty property )
{
    return property_names[ static_cast< std::size_t >( property ) ];
}

std::optional< MapProperty > parse_map_property( std::string_view text )
{
    for ( auto p : all_map_properties )
        if ( name( p ) == text )
            return p;
    return std::nullopt;
}

PropertyCheck check_map( const SoftMapping& mapping, const SoftSpace& dom, const SoftSpace& cod,
                         MapProperty property )
{
    require_between( mapping, dom, cod );
    return decide( mapping, dom, cod, property );
}

bool is_continuous( const SoftMapping& mapping, const SoftSpace& dom, const SoftSpace& cod )
{
    require_between( mapping, dom, cod );
    return !continuity_failure( mapping, dom, cod );
}

bool is_initial( const SoftMapping& mapping, const SoftSpace& dom, const SoftSpace& cod )
{
    return is_continuous( mapping, dom, cod ) && !initial_failure( mapping, dom, cod );
}

bool is_quasihomomorphism( const SoftMapping& mapping, const SoftSpace& dom, const SoftSpace& cod )
{
    return is_initial( mapping, dom, cod ) && !meeting_failure( mapping, dom, cod );
}

MapReport check_all( const SoftMapping& mapping, const SoftSpace& dom, const SoftSpace& cod,
                     std::string mapping_id )
{
    require_between( mapping, dom, cod );
    MapReport report;
    report.mapping_id = std::move( mapping_id );
    for ( auto p : all_map_properties )
        report.results[ static_cast< std::size_t >( p ) ] = decide( mapping, dom, cod, p );
    return report;
}

TwoOfThreeReport two_of_three( const SoftMapping& first, const SoftMapping& second, const SoftSpace& x,
                               const SoftSpace& y, const SoftSpace& z )
{
    require_same_universe( first.target(), second.source(), "two-of-three composition" );
    if ( !is_continuous( first, x, y ) || !is_continuous( second, y, z ) )
        throw MappingPrecondition( "two-of-three needs continuous mappings" );
    TwoOfThreeReport report;
    report.first = is_quasihomomorphism( first, x, y );
    report.second = is_quasihomomorphism( second, y, z );
    report.composite = is_quasihomomorphism( compose( second, first ), x, z );
    return report;
}

} // namespace softtop
