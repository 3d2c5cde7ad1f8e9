#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "satake/types.hpp"

namespace satake {

// A reductive root datum in coordinates: simple roots live in a basis of
// X*(T), simple coroots in the dual basis of X_*(T), so the canonical pairing
// between the two lattices is the dot product of coordinate vectors.
struct RootDatum {
  std::optional<std::string> name;
  int lattice_rank = 0;     // n = rank of X*(T) and X_*(T)
  int semisimple_rank = 0;  // r = number of simple roots, 0 <= r <= n
  std::vector<Vec> simple_roots;    // r vectors of length n
  std::vector<Vec> simple_coroots;  // r vectors of length n

  friend bool operator==(const RootDatum&, const RootDatum&) = default;
};

enum class Isogeny { SimplyConnected, Adjoint };

struct CartanType {
  char series = 'A';  // 'A'..'G'
  int rank = 1;
};

// Parses "A1".."G2" style labels. Throws InvalidCartanType.
CartanType parse_cartan_type(const std::string& label);

// Standard table realization of the simple types. For SimplyConnected the
// simple coroots are the standard basis of X_*(T); for Adjoint the simple
// roots are the standard basis of X*(T). Throws InvalidCartanType when the
// rank is outside the classification bounds (A: r>=1, B/C: r>=2, D: r>=3,
// E: 6..8, F: 4, G: 2).
RootDatum build_from_cartan_type(CartanType type, Isogeny isogeny);
RootDatum build_from_cartan_type(const std::string& label, Isogeny isogeny);

// cartan[i][j] = <alpha_i, alphacheck_j>.
std::vector<Vec> cartan_matrix(const RootDatum& d);

enum class ValidationCode {
  BadShape,
  DiagonalNotTwo,
  PositiveOffDiagonal,
  AsymmetricZeroPattern,
  NotFiniteType,
  RootsDependent,
  CorootsDependent,
};

struct ValidationIssue {
  ValidationCode code;
  int i = -1;
  int j = -1;
  std::string message;
};

std::string validation_code_name(ValidationCode code);

// Empty result means the datum satisfies every structural invariant:
// Cartan diagonal 2, off-diagonal <= 0 with a symmetric zero pattern, all
// leading principal minors positive (finite type), and linearly independent
// simple roots and coroots.
std::vector<ValidationIssue> validate(const RootDatum& d);

struct ValidationError : Error {
  explicit ValidationError(std::vector<ValidationIssue> issues);
  std::vector<ValidationIssue> issues;
};

void validate_or_throw(const RootDatum& d);

// Swaps the two lattices and the roots with the coroots. An involution; the
// Cartan matrix of the result is the transpose of the input's. A trailing
// '^' is toggled on the name so that dualizing twice restores it exactly.
RootDatum langlands_dual(const RootDatum& d);

// True iff v is an integer combination of the simple coroots.
bool in_coroot_lattice(const RootDatum& d, const Coweight& v);

// Integer coordinates of v in the simple-coroot basis, when they exist.
std::optional<Vec> coroot_lattice_coords(const RootDatum& d, const Coweight& v);

// The i-th fundamental coweight (0-based), taken inside the rational span of
// the simple coroots; nullopt when it is not integral in X_*(T).
std::optional<Coweight> fundamental_coweight(const RootDatum& d, int i);

// JSON schema: {"name"?, "rank_lattice", "rank_semisimple",
//               "simple_roots": [[int]], "simple_coroots": [[int]]}.
// Round trips losslessly.
nlohmann::json datum_to_json(const RootDatum& d);
RootDatum datum_from_json(const nlohmann::json& j);

// Canonical content string and 64-bit fingerprint; the optional name does not
// participate, so relabeled copies share caches.
std::string canonical_key(const RootDatum& d);
std::uint64_t datum_fingerprint(const RootDatum& d);

}  // namespace satake
