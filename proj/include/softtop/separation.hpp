#pragma once

#include "softtop/topology.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace softtop {

enum class Axiom
{
    T0,
    T0U,
    T1,
    T2,
    Regular,
    T3,
    T0k,
    T1k,
    KRegular,
    T3k,
    TotallySeparated,
    KTotallySeparated,
};

inline constexpr std::size_t axiom_count = 12;

inline constexpr std::array< Axiom, axiom_count > all_axioms{
    Axiom::T0,  Axiom::T0U, Axiom::T1,       Axiom::T2,  Axiom::Regular,          Axiom::T3,
    Axiom::T0k, Axiom::T1k, Axiom::KRegular, Axiom::T3k, Axiom::TotallySeparated, Axiom::KTotallySeparated,
};

[[nodiscard]] std::string_view name( Axiom axiom );
/// Accepts the names produced by name() plus the aliases TS and KTS.
[[nodiscard]] std::optional< Axiom > parse_axiom( std::string_view text );

/// Decide one separation axiom. Every quantifier ranges over finite sets;
/// the decisions go through least open (clopen) neighbourhoods of points.
[[nodiscard]] bool check_axiom( const SoftSpace& space, Axiom axiom );

/// Soft T1k decided as "every point soft set (F_x, A) is closed".
[[nodiscard]] bool t1k_via_closed_points( const SoftSpace& space );
[[nodiscard]] bool is_point_class_closed( const SoftSpace& space, std::size_t point );
[[nodiscard]] bool is_point_class_closed( const SoftSpace& space, std::string_view point );

struct Implication
{
    Axiom from;
    Axiom to;
};

/// Implications between the axioms that hold in every soft topological space.
inline constexpr std::array< Implication, 12 > proven_implications{ {
    { Axiom::T0, Axiom::T0U },
    { Axiom::T0k, Axiom::T0 },
    { Axiom::T1k, Axiom::T1 },
    { Axiom::T2, Axiom::T1k },
    { Axiom::T3, Axiom::T3k },
    { Axiom::T3k, Axiom::T2 },
    { Axiom::KTotallySeparated, Axiom::TotallySeparated },
    { Axiom::KTotallySeparated, Axiom::T2 },
    { Axiom::KTotallySeparated, Axiom::T3k },
    { Axiom::TotallySeparated, Axiom::T0 },
    { Axiom::T3, Axiom::Regular },
    { Axiom::T3k, Axiom::KRegular },
} };

class AxiomProfile
{
public:
    AxiomProfile() = default;
    AxiomProfile( std::string space_id, std::array< bool, axiom_count > values )
        : _space_id{ std::move( space_id ) }, _values{ values } {}

    [[nodiscard]] const std::string& space_id() const { return _space_id; }
    [[nodiscard]] bool operator[]( Axiom axiom ) const { return _values[ static_cast< std::size_t >( axiom ) ]; }
    [[nodiscard]] const std::array< bool, axiom_count >& values() const { return _values; }

    /// First implication from proven_implications that this profile breaks.
    [[nodiscard]] std::optional< Implication > first_inconsistency() const;

    friend bool operator==( const AxiomProfile& lhs, const AxiomProfile& rhs ) { return lhs._values == rhs._values; }

private:
    std::string _space_id;
    std::array< bool, axiom_count > _values{};
};

/// Every axiom for `space`. Throws InternalError when the profile breaks a
/// proven implication or the two T1k routes disagree.
[[nodiscard]] AxiomProfile classify( const SoftSpace& space, std::string space_id = {} );

} // namespace softtop
