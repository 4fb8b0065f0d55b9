#pragma once

// Soft T0 reflection: the quotient of a space by the relation x ~ y
// ("same open sets"), the canonical surjection onto it, maps induced on
// reflections, and the T(0,alpha) axioms.

#include "softtop/morphisms.hpp"
#include "softtop/separation.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace softtop {

struct Reflection
{
    SoftSpace source;
    /// Partition of the source points into ~-classes. Each class is sorted;
    /// classes are ordered by their least member, which is the representative.
    std::vector< std::vector< std::size_t > > classes;
    /// Source point index -> class index.
    std::vector< std::size_t > class_of;
    /// Points are labelled "[p]" with p the representative's label.
    SoftSpace quotient;
    /// g0X = (r_X, identity): source -> quotient.
    SoftMapping surjection;
    /// False when the source is not soft T0U and the construction was forced.
    bool verified = true;
};

/// Build the reflection. The quotient topology is the family of soft sets
/// over the classes whose preimage under g0X is open. For a soft T0U source
/// this also checks that it equals the family of images of opens, that
/// preimage(image(F)) = F for every open F, and that the quotient is soft T0.
/// Throws NotT0U when the source is not soft T0U unless `force` is set.
[[nodiscard]] Reflection compute_reflection( const SoftSpace& space, bool force = false );

/// (T0(f), e): sends [x] to [f(x)]. `mapping` must be continuous from
/// src.source to tgt.source; throws MappingPrecondition when it is not, or
/// when it does not respect ~ so the class map is ill-defined.
[[nodiscard]] SoftMapping induced_map( const Reflection& src, const Reflection& tgt, const SoftMapping& mapping );

struct Factorization
{
    /// (f', e) with f'([x]) = f(x).
    SoftMapping mapping;
    /// Whether (f', e) happens to be soft open. Recorded, not required.
    bool open = false;
};

/// Factor a continuous map into a soft T0 space through g0X. Checks
/// (f', e) o g0X = (f, e) and continuity of (f', e); uniqueness follows from
/// r_X being onto. Throws MappingPrecondition when the target is not soft T0,
/// the map is not continuous, or it is not constant on ~-classes.
[[nodiscard]] Factorization factor_through_reflection( const Reflection& reflection, const SoftMapping& mapping,
                                                       const SoftSpace& target );

/// The soft set over the source universe whose every row is the class of x.
[[nodiscard]] SoftSet point_class_soft_set( const Reflection& reflection, std::size_t point );
[[nodiscard]] SoftSet point_class_soft_set( const Reflection& reflection, std::string_view point );

enum class Alpha
{
    ZeroK,
    One,
    OneK,
    Two,
    ThreeK,
    Three,
    TS,
    TSK,
};

inline constexpr std::size_t alpha_count = 8;

inline constexpr std::array< Alpha, alpha_count > all_alphas{
    Alpha::ZeroK, Alpha::One, Alpha::OneK, Alpha::Two, Alpha::ThreeK, Alpha::Three, Alpha::TS, Alpha::TSK,
};

/// "T(0,0k)", "T(0,1)", ..., "T(0,TSk)".
[[nodiscard]] std::string_view name( Alpha alpha );
[[nodiscard]] std::optional< Alpha > parse_alpha( std::string_view text );
[[nodiscard]] Axiom axiom_for( Alpha alpha );

/// Whether the reflection's quotient satisfies the axiom paired with alpha.
/// Throws NotT0U for spaces outside soft T0U.
[[nodiscard]] bool check_t0_alpha( const SoftSpace& space, Alpha alpha );
[[nodiscard]] bool check_t0_alpha( const Reflection& reflection, Alpha alpha );

/// The same decision without building the quotient: separation conditions
/// quantified over pairs of points in distinct ~-classes. For OneK the
/// pairwise condition and "every class soft set is closed" must agree
/// (InternalError otherwise). Throws NotT0U for spaces outside soft T0U.
[[nodiscard]] bool check_t0_alpha_direct( const SoftSpace& space, Alpha alpha );

} // namespace softtop
