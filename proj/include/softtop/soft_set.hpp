#pragma once

// Soft sets over a finite universe (X, A), their algebra, and soft mappings.
//
// A soft set (F, A) is stored as one 64-bit word holding the concatenated
// parameter rows: bit  a * |X| + x  is set iff x is in F(a). The universe
// therefore holds at most 64 cells (|X| * |A| <= 64).

#include "softtop/error.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace softtop {

using Mask = std::uint64_t;

inline constexpr std::size_t max_cells = 64;

/// Ground set X and parameter set A, both as ordered label lists.
class Universe
{
public:
    Universe( std::vector< std::string > points, std::vector< std::string > parameters );

    static std::shared_ptr< const Universe > make( std::vector< std::string > points,
                                                   std::vector< std::string > parameters );

    [[nodiscard]] std::size_t point_count() const { return _points.size(); }
    [[nodiscard]] std::size_t parameter_count() const { return _parameters.size(); }
    [[nodiscard]] std::size_t cell_count() const { return _points.size() * _parameters.size(); }

    [[nodiscard]] const std::vector< std::string >& points() const { return _points; }
    [[nodiscard]] const std::vector< std::string >& parameters() const { return _parameters; }

    [[nodiscard]] std::optional< std::size_t > find_point( std::string_view label ) const;
    [[nodiscard]] std::optional< std::size_t > find_parameter( std::string_view label ) const;
    // Throw UnknownLabel when absent.
    [[nodiscard]] std::size_t point_index( std::string_view label ) const;
    [[nodiscard]] std::size_t parameter_index( std::string_view label ) const;

    [[nodiscard]] std::size_t cell( std::size_t point, std::size_t parameter ) const
    {
        return parameter * _points.size() + point;
    }

    [[nodiscard]] Mask full() const { return _full; }
    /// Every point at parameter `parameter`.
    [[nodiscard]] Mask row( std::size_t parameter ) const;
    /// Point `point` at every parameter.
    [[nodiscard]] Mask column( std::size_t point ) const { return _columns[ point ]; }

    void check_point( std::size_t point ) const;
    void check_parameter( std::size_t parameter ) const;

    friend bool operator==( const Universe& lhs, const Universe& rhs )
    {
        return lhs._points == rhs._points && lhs._parameters == rhs._parameters;
    }

private:
    std::vector< std::string > _points;
    std::vector< std::string > _parameters;
    std::vector< Mask > _columns;
    Mask _row_mask = 0; // points of a single row, unshifted
    Mask _full = 0;
};

using UniversePtr = std::shared_ptr< const Universe >;

/// Same object, or structurally equal label lists.
[[nodiscard]] bool same_universe( const UniversePtr& lhs, const UniversePtr& rhs );
void require_same_universe( const UniversePtr& lhs, const UniversePtr& rhs, std::string_view what );

/// The universe with points `kept` (given in any order, stored in the
/// original universe order) and the same parameters.
[[nodiscard]] UniversePtr sub_universe( const Universe& universe, const std::vector< std::string >& kept );

// Raw mask predicates. `member` is total membership (x in F(a) for every a);
// `excluded` is membership in the complement (x outside F(a) for every a).
namespace bits {

inline bool member( const Universe& u, std::size_t point, Mask set )
{
    const Mask col = u.column( point );
    return ( set & col ) == col;
}

inline bool excluded( const Universe& u, std::size_t point, Mask set )
{
    return ( set & u.column( point ) ) == 0;
}

inline bool subset( Mask lhs, Mask rhs ) { return ( lhs & ~rhs ) == 0; }

/// Restrict to the points `kept` (ascending indices) and re-pack over the
/// sub-universe with those points.
[[nodiscard]] Mask restrict_to( const Universe& from, const std::vector< std::size_t >& kept, Mask set );

} // namespace bits

class SoftSet
{
public:
    SoftSet( UniversePtr universe, Mask bits );

    static SoftSet null( UniversePtr universe );
    static SoftSet absolute( UniversePtr universe );
    /// One row of point labels per parameter, in parameter order.
    static SoftSet from_rows( UniversePtr universe, const std::vector< std::vector< std::string > >& rows );
    /// Parameter label -> point labels; absent parameters get empty rows.
    static SoftSet from_map( UniversePtr universe, const std::map< std::string, std::vector< std::string > >& rows );

    [[nodiscard]] const UniversePtr& universe() const { return _universe; }
    [[nodiscard]] Mask bits() const { return _bits; }
    /// Row F(a) as a bitset over point indices.
    [[nodiscard]] Mask row( std::size_t parameter ) const;
    [[nodiscard]] std::vector< std::string > row_labels( std::size_t parameter ) const;
    [[nodiscard]] bool is_null() const { return _bits == 0; }

    /// Structural equality (labels and bits); never throws.
    friend bool operator==( const SoftSet& lhs, const SoftSet& rhs )
    {
        return lhs._bits == rhs._bits && same_universe( lhs._universe, rhs._universe );
    }

private:
    UniversePtr _universe;
    Mask _bits;
};

/// Rows rendered as  <{x,y},{}>.
[[nodiscard]] std::string to_string( const SoftSet& set );

[[nodiscard]] SoftSet complement( const SoftSet& set );
[[nodiscard]] SoftSet soft_union( const SoftSet& lhs, const SoftSet& rhs );
[[nodiscard]] SoftSet soft_intersection( const SoftSet& lhs, const SoftSet& rhs );
[[nodiscard]] SoftSet soft_difference( const SoftSet& lhs, const SoftSet& rhs );

[[nodiscard]] bool is_subset( const SoftSet& lhs, const SoftSet& rhs );
/// Mutual inclusion; throws UniverseMismatch unlike operator==.
[[nodiscard]] bool equals( const SoftSet& lhs, const SoftSet& rhs );
[[nodiscard]] bool is_disjoint( const SoftSet& lhs, const SoftSet& rhs );

/// x in (F, A): x in F(a) for every parameter a.
[[nodiscard]] bool member( std::size_t point, const SoftSet& set );
[[nodiscard]] bool member( std::string_view point, const SoftSet& set );
[[nodiscard]] bool member_at( std::size_t point, std::size_t parameter, const SoftSet& set );
[[nodiscard]] bool member_at( std::string_view point, std::string_view parameter, const SoftSet& set );

/// (F_x, A) with F_x(a) = {x} for every a.
[[nodiscard]] SoftSet point_soft_set( std::size_t point, const UniversePtr& universe );
[[nodiscard]] SoftSet point_soft_set( std::string_view point, const UniversePtr& universe );

/// Rowwise intersection with the points of `sub`, re-anchored over `sub`.
/// `sub` must carry a nonempty subset of the points and the same parameters.
[[nodiscard]] SoftSet restrict_to( const SoftSet& set, const UniversePtr& sub );
[[nodiscard]] SoftSet restrict_to( const SoftSet& set, const std::vector< std::string >& points );

/// A pair (f, e) of total functions between universes.
class SoftMapping
{
public:
    SoftMapping( UniversePtr source, UniversePtr target, std::vector< std::size_t > point_map,
                 std::vector< std::size_t > param_map );

    static SoftMapping identity( const UniversePtr& universe );
    static SoftMapping from_labels( UniversePtr source, UniversePtr target,
                                    const std::map< std::string, std::string >& point_map,
                                    const std::map< std::string, std::string >& param_map );

    [[nodiscard]] const UniversePtr& source() const { return _source; }
    [[nodiscard]] const UniversePtr& target() const { return _target; }
    [[nodiscard]] const std::vector< std::size_t >& point_map() const { return _point_map; }
    [[nodiscard]] const std::vector< std::size_t >& param_map() const { return _param_map; }

    [[nodiscard]] bool points_injective() const;
    [[nodiscard]] bool points_surjective() const;
    [[nodiscard]] bool params_injective() const;
    [[nodiscard]] bool params_surjective() const;
    [[nodiscard]] bool is_injective() const { return points_injective() && params_injective(); }
    [[nodiscard]] bool is_surjective() const { return points_surjective() && params_surjective(); }

    [[nodiscard]] Mask image_bits( Mask set ) const;
    [[nodiscard]] Mask preimage_bits( Mask set ) const;

    friend bool operator==( const SoftMapping& lhs, const SoftMapping& rhs )
    {
        return lhs._point_map == rhs._point_map && lhs._param_map == rhs._param_map
               && same_universe( lhs._source, rhs._source ) && same_universe( lhs._target, rhs._target );
    }

private:
    UniversePtr _source;
    UniversePtr _target;
    std::vector< std::size_t > _point_map;
    std::vector< std::size_t > _param_map;
    std::vector< std::uint8_t > _cell_target; // source cell -> target cell
};

[[nodiscard]] SoftSet image( const SoftMapping& mapping, const SoftSet& set );
[[nodiscard]] SoftSet preimage( const SoftMapping& mapping, const SoftSet& set );
/// (g, e') o (f, e) = (g o f, e' o e); `first` is applied first.
[[nodiscard]] SoftMapping compose( const SoftMapping& second, const SoftMapping& first );

} // namespace softtop
