#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "satake/rational.hpp"
#include "satake/root_datum.hpp"
#include "satake/types.hpp"
#include "satake/weyl.hpp"

namespace satake {

// Map from coweight (by canonical coordinates) to a positive multiplicity.
// Used both for weight tables and for tensor decompositions.
struct DecompositionTable {
  std::map<Vec, Int> entries;

  Int multiplicity_of(const Coweight& v) const {
    auto it = entries.find(v.coords);
    return it == entries.end() ? 0 : it->second;
  }
  Int total() const {
    Int s = 0;
    for (const auto& [k, m] : entries) s += m;
    return s;
  }
};

// Memoization store for Kostant partition values. Instance-confined: callers
// own one and must not share it across threads. `finals` maps
// "<datum fingerprint hex>:<coords in the simple-coroot basis>" to the
// partition value and is what the cache file persists; the intermediate DP
// states are transient.
class PartitionCache {
 public:
  std::map<std::string, Int> finals;
  std::unordered_map<std::string, Int> transient;
};

// Number of ways to write beta as a nonnegative integer combination of the
// positive coroots. Zero when beta is not in the nonnegative coroot cone.
// Results are independent of whether a cache is supplied.
Int kostant_partition(const RootDatum& d, const Coweight& beta, PartitionCache* cache = nullptr);

// Weight multiplicity of nu in the irreducible highest-weight-lambda
// representation of the dual group, by the alternating Weyl-orbit sum over
// partition values. Requires lambda dominant; throws ResourceError when the
// Weyl group exceeds weyl_cap.
Int weight_multiplicity_kostant(const RootDatum& d, const Coweight& lambda, const Coweight& nu,
                                PartitionCache* cache = nullptr, Int weyl_cap = kDefaultWeylCap);

// The same multiplicity by the Freudenthal recursion; an independent
// algorithm used to cross-check the alternating sum.
Int weight_multiplicity_freudenthal(const RootDatum& d, const Coweight& lambda,
                                    const Coweight& nu);

// Canonical multiplicity entry point (currently the Kostant route).
Int weight_multiplicity(const RootDatum& d, const Coweight& lambda, const Coweight& nu,
                        PartitionCache* cache = nullptr, Int weyl_cap = kDefaultWeylCap);

// dim of the irreducible with highest weight lambda: the exact product
// formula over positive roots paired against the shifted highest weight.
Int weyl_dimension(const RootDatum& d, const Coweight& lambda);

// Dominant weights mu <= lambda (lambda - mu a nonnegative integer coroot
// combination), i.e. the dominant support of the weight table.
std::vector<Coweight> dominant_weights_below(const RootDatum& d, const Coweight& lambda);

// Multiplicities of all dominant weights of the irreducible, by Freudenthal.
std::map<Vec, Int> dominant_weight_multiplicities(const RootDatum& d, const Coweight& lambda);

// Full weight table: W-invariant, support exactly the orbit expansion of the
// dominant support, multiplicities summing to weyl_dimension(lambda).
DecompositionTable weight_table(const RootDatum& d, const Coweight& lambda,
                                Int orbit_cap = kDefaultWeylCap);

// W-invariant symmetric bilinear form on the coweight lattice: on the coroot
// span the standard symmetrization of the Cartan matrix with short coroots of
// squared length 2; central directions carry the coordinate dot product,
// orthogonal to the span.
class InvariantForm {
 public:
  static InvariantForm standard(const RootDatum& d);

  Rat value(const Vec& u, const Vec& v) const;
  Rat norm(const Vec& u) const { return value(u, u); }
  const std::vector<std::vector<Rat>>& gram() const { return gram_; }

 private:
  std::vector<std::vector<Rat>> gram_;
};

}  // namespace satake
