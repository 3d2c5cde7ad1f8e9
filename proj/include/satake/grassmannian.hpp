#pragma once

#include <optional>

#include "satake/multiplicity.hpp"
#include "satake/root_datum.hpp"
#include "satake/types.hpp"

namespace satake {

// Dimension calculus of the loop Grassmannian of the datum's group: orbits
// indexed by dominant coweights, semi-infinite attracting (S) and repelling
// (T) cells indexed by arbitrary coweights, and their intersections. All
// dimensions are plain integers in ordinary units; parity violations raise
// InternalError instead of rounding.

// Orbit label: a dominant coweight.
struct OrbitId {
  Coweight lambda;
};

enum class SemiInfiniteSide { Attracting, Repelling };

struct SemiInfiniteOrbitId {
  Coweight nu;
  SemiInfiniteSide side = SemiInfiniteSide::Attracting;
};

// dim of the orbit labeled by dominant lambda; equals its doubled height.
Int orbit_dim(const RootDatum& d, const Coweight& lambda);

// Closure order on orbit labels: mu lies in the closure of the lambda-orbit
// iff lambda - mu is a nonnegative integer coroot combination.
bool closure_contains(const RootDatum& d, const Coweight& lambda, const Coweight& mu);

// dim(S_nu intersect orbit(lambda)): half the height sum of nu and lambda.
// nullopt means the intersection is empty, which happens exactly when the
// nu-weight multiplicity of the lambda-irreducible vanishes.
std::optional<Int> s_intersection_dim(const RootDatum& d, const Coweight& nu,
                                      const Coweight& lambda, PartitionCache* cache = nullptr,
                                      Int weyl_cap = kDefaultWeylCap);

// dim(T_nu intersect orbit(lambda)). The orbit is always labeled by its
// dominant representative; the antidominant one required by the height
// formula is produced internally by the longest element.
std::optional<Int> t_intersection_dim(const RootDatum& d, const Coweight& nu,
                                      const Coweight& lambda, PartitionCache* cache = nullptr,
                                      Int weyl_cap = kDefaultWeylCap);

// Number of irreducible components of S_nu intersected with the closed
// lambda-orbit (MV cycles of weight nu); equals the weight multiplicity.
Int mv_cycle_count(const RootDatum& d, const Coweight& nu, const Coweight& lambda,
                   PartitionCache* cache = nullptr, Int weyl_cap = kDefaultWeylCap);

// The index pairing the attracting-cell functor at nu with the repelling-cell
// functor: w0 * nu.
Coweight s_to_t_index(const RootDatum& d, const Coweight& nu);

// Exact dimension of the convolution stratum fiber over nu inside the product
// of the lambda- and mu-orbits: half the total height of lambda, mu, nu.
// nullopt (not comparable) when nu's dominant representative is not under
// lambda+mu in the closure order or the height sum is odd.
std::optional<Int> convolution_fiber_dim(const RootDatum& d, const Coweight& lambda,
                                         const Coweight& mu, const Coweight& nu);

// Semi-smallness defect of the stratum triple: half the orbit dimension drop
// minus the expected fiber dimension. Identically zero; a nonzero value is an
// internal-error signal. Preconditions: lambda, mu, nu dominant and nu in the
// closure of the (lambda+mu)-orbit.
Int semismall_defect(const RootDatum& d, const Coweight& lambda, const Coweight& mu,
                     const Coweight& nu);

}  // namespace satake
