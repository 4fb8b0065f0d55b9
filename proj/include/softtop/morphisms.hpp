#pragma once

#include "softtop/topology.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace softtop {

enum class MapProperty
{
    Continuous,
    Open,
    Closed,
    Initial,
    InitialViaClosure,
    Quasihomomorphism,
    Injective,
    Surjective,
    Homeomorphism,
};

inline constexpr std::size_t map_property_count = 9;

inline constexpr std::array< MapProperty, map_property_count > all_map_properties{
    MapProperty::Continuous,        MapProperty::Open,      MapProperty::Closed,
    MapProperty::Initial,           MapProperty::InitialViaClosure,
    MapProperty::Quasihomomorphism, MapProperty::Injective, MapProperty::Surjective,
    MapProperty::Homeomorphism,
};

[[nodiscard]] std::string_view name( MapProperty property );
[[nodiscard]] std::optional< MapProperty > parse_map_property( std::string_view text );

/// Result of one property decision. On failure `witness` holds the soft
/// set(s) breaking the property, when the property is about soft sets.
struct PropertyCheck
{
    bool holds = true;
    std::vector< SoftSet > witness;
    std::string detail;
};

/// Decide `property` for `mapping` viewed as a map dom -> cod. Initial,
/// InitialViaClosure and Quasihomomorphism check continuity first and fail
/// with the continuity witness when it does not hold.
[[nodiscard]] PropertyCheck check_map( const SoftMapping& mapping, const SoftSpace& dom, const SoftSpace& cod,
                                       MapProperty property );

// Witness-free decisions used by the exhaustive scans.
[[nodiscard]] bool is_continuous( const SoftMapping& mapping, const SoftSpace& dom, const SoftSpace& cod );
[[nodiscard]] bool is_initial( const SoftMapping& mapping, const SoftSpace& dom, const SoftSpace& cod );
[[nodiscard]] bool is_quasihomomorphism( const SoftMapping& mapping, const SoftSpace& dom, const SoftSpace& cod );

struct MapReport
{
    std::string mapping_id;
    std::array< PropertyCheck, map_property_count > results;

    [[nodiscard]] bool operator[]( MapProperty p ) const { return results[ static_cast< std::size_t >( p ) ].holds; }
    [[nodiscard]] const PropertyCheck& at( MapProperty p ) const { return results[ static_cast< std::size_t >( p ) ]; }
};

[[nodiscard]] MapReport check_all( const SoftMapping& mapping, const SoftSpace& dom, const SoftSpace& cod,
                                   std::string mapping_id = {} );

/// Quasihomomorphism status of m1: X -> Y, m2: Y -> Z and m2 o m1, and
/// whether "two of the three are quasihomomorphisms => so is the third"
/// holds for this instance.
struct TwoOfThreeReport
{
    bool first = false;
    bool second = false;
    bool composite = false;

    [[nodiscard]] bool consistent() const
    {
        const int count = int( first ) + int( second ) + int( composite );
        return count != 2;
    }
};

/// Both maps must be continuous; throws MappingPrecondition otherwise.
[[nodiscard]] TwoOfThreeReport two_of_three( const SoftMapping& first, const SoftMapping& second,
                                             const SoftSpace& x, const SoftSpace& y, const SoftSpace& z );

} // namespace softtop
