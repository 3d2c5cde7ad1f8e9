#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "satake/multiplicity.hpp"
#include "satake/root_datum.hpp"
#include "satake/types.hpp"

namespace satake {

// Finitely supported coweight-indexed integer map: the character ring in
// which convolution of orbit sheaves becomes plain multiplication. Public
// constructors only produce genuine characters (nonnegative, W-invariant);
// virtual characters appear internally during decomposition.
class Character {
 public:
  Character() = default;

  // Character of the irreducible attached to the dominant coweight lambda.
  static Character irreducible(const RootDatum& d, const Coweight& lambda,
                               Int orbit_cap = kDefaultWeylCap);

  // Validates W-invariance and nonnegativity of the given terms. Throws
  // DecompositionError on non-W-invariant input, DomainError on negative
  // coefficients or wrong coordinate lengths.
  static Character from_terms(const RootDatum& d, std::map<Vec, Int> terms);

  const std::map<Vec, Int>& terms() const { return terms_; }
  std::uint64_t fingerprint() const { return fingerprint_; }
  int lattice_rank() const { return lattice_rank_; }
  Int coefficient(const Coweight& v) const {
    auto it = terms_.find(v.coords);
    return it == terms_.end() ? 0 : it->second;
  }
  Int dimension() const {
    Int s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
  }

  friend bool operator==(const Character&, const Character&) = default;
  friend Character product(const Character& a, const Character& b);

 private:
  Character(std::uint64_t fingerprint, int lattice_rank, std::map<Vec, Int> terms)
      : fingerprint_(fingerprint), lattice_rank_(lattice_rank), terms_(std::move(terms)) {}

  std::uint64_t fingerprint_ = 0;
  int lattice_rank_ = 0;
  std::map<Vec, Int> terms_;
};

// Bilinear convolution of term maps; commutative and associative. Throws
// DatumMismatch when the operands belong to different data.
Character product(const Character& a, const Character& b);

// Instance-confined store of irreducible characters keyed by highest weight.
// Purely an accelerator for sweeps; results never depend on it.
class CharacterCache {
 public:
  std::map<Vec, Character> irreducibles;

  const Character& irreducible(const RootDatum& d, const Coweight& lambda,
                               Int orbit_cap = kDefaultWeylCap);
};

// Writes a W-invariant integer character as a sum of irreducible characters
// by repeatedly stripping the leading surviving term (maximal doubled height,
// then lexicographically maximal). Exact reconstruction is an identity;
// negative final multiplicities raise DecompositionError
// ("NegativeMultiplicity"), non-W-invariant input raises DecompositionError
// ("NonWInvariantInput").
DecompositionTable decompose(const RootDatum& d, const Character& c,
                             Int orbit_cap = kDefaultWeylCap, CharacterCache* cache = nullptr);

// Decomposition of the convolution of the two irreducibles.
DecompositionTable tensor_decompose(const RootDatum& d, const Coweight& lambda,
                                    const Coweight& mu, Int orbit_cap = kDefaultWeylCap,
                                    CharacterCache* cache = nullptr);

// Highest weight of the rigid dual of the lambda-irreducible: the dominant
// representative of -lambda.
Coweight dual_object(const RootDatum& d, const Coweight& lambda);

// Cohomological grading of the fiber functor on the lambda-irreducible:
// degree k carries the total multiplicity of the weights of doubled height k.
struct GradedDims {
  std::map<Int, Int> entries;

  Int dim_at(Int degree) const {
    auto it = entries.find(degree);
    return it == entries.end() ? 0 : it->second;
  }
  Int total() const {
    Int s = 0;
    for (const auto& [k, v] : entries) s += v;
    return s;
  }
};

GradedDims fiber_functor_grading(const RootDatum& d, const Coweight& lambda,
                                 Int orbit_cap = kDefaultWeylCap);

// Reproducible exhibit of the category up to a height bound: every object
// with its dimension, grading and dual, every pairwise tensor decomposition,
// and the outcome of the internal cross-checks.
struct SatakeReport {
  struct ObjectRow {
    Coweight lambda;
    Int dim = 0;
    GradedDims grading;
    Coweight dual;
  };
  struct TensorRow {
    Coweight lambda;
    Coweight mu;
    std::map<Vec, Int> decomposition;
  };
  struct CheckRow {
    std::string name;
    bool pass = false;
    std::string detail;
  };

  Int height_bound = 0;
  std::vector<ObjectRow> objects;
  std::vector<TensorRow> tensor;
  std::vector<CheckRow> checks;
  bool all_pass = true;
};

SatakeReport satake_report(const RootDatum& d, Int height_bound, Int object_cap = 4096,
                           Int orbit_cap = kDefaultWeylCap);

nlohmann::json report_to_json(const SatakeReport& report);
std::string report_to_text(const SatakeReport& report);

}  // namespace satake
