#pragma once

// Enumeration of soft topologies on small universes and implication mining.
//
// Soft sets over (X, A) are exactly the subsets of the |X|*|A| cells, and
// soft union / intersection are plain set operations on cells, so the soft
// topologies on (X, A) are the point-set topologies on the cell set.

#include "softtop/reflection.hpp"
#include "softtop/separation.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace softtop {

inline constexpr std::size_t default_exhaustive_cells = 4;
/// Upper limit accepted for the exhaustive bound (209527 topologies at 6 cells).
inline constexpr std::size_t hard_exhaustive_cells = 6;

/// Bound on |X|*|A| for exhaustive enumeration: SOFTTOP_MAX_CELLS when set
/// (clamped to hard_exhaustive_cells), else default_exhaustive_cells.
[[nodiscard]] std::size_t exhaustive_bound_from_env();

struct EnumerationSpec
{
    enum class Mode
    {
        exhaustive,
        sampled,
    };

    std::size_t points = 2;
    std::size_t params = 2;
    Mode mode = Mode::exhaustive;
    std::size_t sample_count = 0;
    std::optional< std::uint64_t > seed;
    std::size_t max_cells = default_exhaustive_cells;

    static EnumerationSpec exhaustive( std::size_t points, std::size_t params,
                                       std::size_t max_cells = default_exhaustive_cells );
    static EnumerationSpec sampled( std::size_t points, std::size_t params, std::size_t count, std::uint64_t seed );
};

/// Throws Error when the spec is unusable.
void validate( const EnumerationSpec& spec );

/// Universe with points x1..xn and parameters a1..am.
[[nodiscard]] UniversePtr enumeration_universe( std::size_t points, std::size_t params );

/// Every topology on `cells` points, each as its sorted open family, in a
/// fixed order. The work is split over `threads` workers without changing
/// the order.
[[nodiscard]] std::vector< std::vector< Mask > > enumerate_cell_topologies( std::size_t cells, std::size_t threads = 1 );

/// Stream the spaces of `spec` to `visit`; stop early when it returns false.
void for_each_space( const EnumerationSpec& spec, const std::function< bool( const SoftSpace& ) >& visit );
[[nodiscard]] std::vector< SoftSpace > enumerate_spaces( const EnumerationSpec& spec, std::size_t threads = 1 );

using Predicate = std::variant< Axiom, Alpha >;

[[nodiscard]] std::string to_string( const Predicate& predicate );
[[nodiscard]] std::optional< Predicate > parse_predicate( std::string_view text );

/// antecedent_1 & ... & antecedent_n => consequent
struct ImplicationQuery
{
    std::vector< Predicate > antecedent;
    Predicate consequent;
};

/// Parses "ANTE=>CONS" where ANTE is one or more predicates joined by '&'.
/// Throws ParseError.
[[nodiscard]] ImplicationQuery parse_implication( std::string_view text );
[[nodiscard]] std::string to_string( const ImplicationQuery& query );

/// Evaluation of a query on one space. Queries mentioning T(0,alpha)
/// predicates are not applicable to spaces outside soft T0U.
enum class Verdict
{
    holds,
    refutes,
    not_applicable,
};

[[nodiscard]] Verdict evaluate( const SoftSpace& space, const ImplicationQuery& query );

struct ImplicationReport
{
    enum class Status
    {
        holds,
        refuted,
    };

    ImplicationQuery query;
    Status status = Status::holds;
    /// First refuting space in enumeration order.
    std::optional< SoftSpace > witness;
    std::size_t spaces_checked = 0;
    /// Spaces skipped because they are not soft T0U (T(0,alpha) queries only).
    std::size_t skipped = 0;
};

[[nodiscard]] ImplicationReport mine_implication( const EnumerationSpec& spec, const ImplicationQuery& query,
                                                  std::size_t threads = 1 );

/// First refuting space in enumeration order, if any.
[[nodiscard]] std::optional< SoftSpace > find_counterexample( const EnumerationSpec& spec,
                                                              const ImplicationQuery& query, std::size_t threads = 1 );

} // namespace softtop
