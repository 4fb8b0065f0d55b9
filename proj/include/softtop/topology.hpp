#pragma once

#include "softtop/soft_set.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace softtop {

/// Outcome of checking a family against the soft topology axioms.
struct ValidationReport
{
    enum class Status
    {
        ok,
        missing_null,
        missing_absolute,
        intersection_escapes,
        union_escapes,
    };

    Status status = Status::ok;
    // The pair whose intersection / union is missing from the family.
    std::optional< SoftSet > first;
    std::optional< SoftSet > second;

    [[nodiscard]] bool ok() const { return status == Status::ok; }
    [[nodiscard]] std::string message() const;
};

[[nodiscard]] ValidationReport validate_topology( const UniversePtr& universe, const std::vector< SoftSet >& family );

/// A validated soft topology. Opens are deduplicated and sorted by their
/// flattened bit value.
class SoftTopology
{
public:
    /// Throws TopologyViolation naming the witness when `family` is not a topology.
    static SoftTopology from_family( UniversePtr universe, const std::vector< SoftSet >& family );

    struct trusted_t
    {
    };
    static constexpr trusted_t trusted{};
    /// For callers that construct topologies by a sound procedure; `opens`
    /// need not be sorted. Not validated.
    SoftTopology( UniversePtr universe, std::vector< Mask > opens, trusted_t );

    [[nodiscard]] const UniversePtr& universe() const { return _universe; }
    [[nodiscard]] const std::vector< Mask >& opens() const { return _opens; }
    [[nodiscard]] std::size_t size() const { return _opens.size(); }
    [[nodiscard]] bool contains( Mask set ) const;
    [[nodiscard]] std::vector< SoftSet > open_sets() const;

    friend bool operator==( const SoftTopology& lhs, const SoftTopology& rhs )
    {
        return lhs._opens == rhs._opens && same_universe( lhs._universe, rhs._universe );
    }

private:
    UniversePtr _universe;
    std::vector< Mask > _opens;
};

/// Smallest soft topology containing `family` (plus 0_A and 1_A).
[[nodiscard]] SoftTopology generate_topology( const UniversePtr& universe, const std::vector< SoftSet >& family );
[[nodiscard]] SoftTopology generate_topology_bits( const UniversePtr& universe, const std::vector< Mask >& family );

/// A soft topological space (X, T, A) with precomputed lookups.
class SoftSpace
{
public:
    explicit SoftSpace( SoftTopology topology );

    [[nodiscard]] const UniversePtr& universe() const;
    [[nodiscard]] const SoftTopology& topology() const;
    [[nodiscard]] const std::vector< Mask >& opens() const;
    /// Complements of the opens, sorted.
    [[nodiscard]] const std::vector< Mask >& closed() const;
    [[nodiscard]] const std::vector< Mask >& clopens() const;
    /// Every G & C with G open and C closed, sorted and deduplicated.
    /// Computed on first use.
    [[nodiscard]] const std::vector< Mask >& locally_closed() const;

    [[nodiscard]] bool is_open_bits( Mask set ) const;
    [[nodiscard]] bool is_closed_bits( Mask set ) const;

    /// Least open set containing `point` (total membership): the intersection
    /// of all such opens. It is itself open.
    [[nodiscard]] Mask least_open( std::size_t point ) const;
    /// Least open set containing every cell of `set`.
    [[nodiscard]] Mask least_open_superset( Mask set ) const;
    /// Least clopen set containing `point`.
    [[nodiscard]] Mask least_clopen( std::size_t point ) const;

    friend bool operator==( const SoftSpace& lhs, const SoftSpace& rhs )
    {
        return lhs.topology() == rhs.topology();
    }

private:
    struct impl;
    std::shared_ptr< const impl > _impl;
};

[[nodiscard]] SoftSpace make_space( const UniversePtr& universe, const std::vector< SoftSet >& family );

/// Relative topology on the nonempty point subset `points`.
[[nodiscard]] SoftSpace subspace( const SoftSpace& space, const std::vector< std::string >& points );
/// Same, with points as a bitset over point indices.
[[nodiscard]] SoftSpace subspace_bits( const SoftSpace& space, Mask points );

[[nodiscard]] bool is_open( const SoftSpace& space, const SoftSet& set );
[[nodiscard]] bool is_closed( const SoftSpace& space, const SoftSet& set );
[[nodiscard]] bool is_clopen( const SoftSpace& space, const SoftSet& set );

/// The open soft neighbourhoods of `point`: opens G with x in G. Every soft
/// neighbourhood is a superset of one of these.
[[nodiscard]] std::vector< SoftSet > neighborhoods( const SoftSpace& space, std::size_t point );
[[nodiscard]] std::vector< SoftSet > neighborhoods( const SoftSpace& space, std::string_view point );

[[nodiscard]] SoftSet closure( const SoftSpace& space, const SoftSet& set );
[[nodiscard]] SoftSet interior( const SoftSpace& space, const SoftSet& set );
[[nodiscard]] Mask closure_bits( const SoftSpace& space, Mask set );
[[nodiscard]] Mask interior_bits( const SoftSpace& space, Mask set );

/// x ~ y: x and y lie in exactly the same open sets.
[[nodiscard]] bool approx( const SoftSpace& space, std::size_t x, std::size_t y );
[[nodiscard]] bool approx( const SoftSpace& space, std::string_view x, std::string_view y );

[[nodiscard]] bool is_locally_closed( const SoftSpace& space, const SoftSet& set );

/// Closure points vs. neighbourhood meeting, over every soft set of a small space.
/// `forward` is the direction "x in cl(F) => F meets every open nbhd of x";
/// `converse` records the reverse direction.
struct ClosurePointReport
{
    bool forward = true;
    bool converse = true;
    std::optional< SoftSet > forward_witness;
    std::optional< SoftSet > converse_witness;
    std::size_t converse_point = 0;
};

/// Enumerates all 2^cells soft sets; requires cell_count() <= 20.
[[nodiscard]] ClosurePointReport check_closure_points( const SoftSpace& space );

} // namespace softtop
