#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace satake {

// All engine arithmetic is exact integer arithmetic; there is no floating
// point anywhere in the library.
using Int = long long;
using Vec = std::vector<Int>;

inline Vec add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Vec scaled(const Vec& a, Int k) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = k * a[i];
  return out;
}

inline Vec negated(const Vec& a) { return scaled(a, -1); }

inline bool is_zero(const Vec& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

// Element of the character lattice X*(T), in the datum's X*-basis.
struct Weight {
  Vec coords;

  Weight() = default;
  explicit Weight(Vec c) : coords(std::move(c)) {}

  friend auto operator<=>(const Weight&, const Weight&) = default;
};

// Element of the cocharacter lattice X_*(T), in the basis dual to the
// X*-basis; the canonical pairing is the literal dot product of coordinates.
struct Coweight {
  Vec coords;

  Coweight() = default;
  explicit Coweight(Vec c) : coords(std::move(c)) {}

  friend auto operator<=>(const Coweight&, const Coweight&) = default;
};

inline Weight operator+(const Weight& a, const Weight& b) { return Weight(add(a.coords, b.coords)); }
inline Weight operator-(const Weight& a, const Weight& b) { return Weight(sub(a.coords, b.coords)); }
inline Weight operator-(const Weight& a) { return Weight(negated(a.coords)); }
inline Weight operator*(Int k, const Weight& a) { return Weight(scaled(a.coords, k)); }

inline Coweight operator+(const Coweight& a, const Coweight& b) { return Coweight(add(a.coords, b.coords)); }
inline Coweight operator-(const Coweight& a, const Coweight& b) { return Coweight(sub(a.coords, b.coords)); }
inline Coweight operator-(const Coweight& a) { return Coweight(negated(a.coords)); }
inline Coweight operator*(Int k, const Coweight& a) { return Coweight(scaled(a.coords, k)); }

// A word in the simple reflections, letters 0-based. The `reduced` flag may
// only be set after verification (see weyl.hpp: is_reduced / mark_reduced).
struct WeylWord {
  std::vector<int> letters;
  bool reduced = false;
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unknown Cartan series or rank outside the classification bounds.
struct InvalidCartanType : Error {
  using Error::Error;
};

// A caller violated an operation precondition (non-dominant input, index out
// of range, malformed coordinates).
struct DomainError : Error {
  using Error::Error;
};

// A configurable resource cap was exceeded (Weyl group enumeration, orbit
// expansion, report size, integer overflow guards).
struct ResourceError : Error {
  using Error::Error;
};

// The engine detected breakage of one of its own invariants (parity
// violation, inconsistent orbit signs). Never caused by user input alone.
struct InternalError : Error {
  using Error::Error;
};

// decompose() rejected its input: NegativeMultiplicity or NonWInvariantInput.
struct DecompositionError : Error {
  using Error::Error;
};

// Two values built over different root data were combined.
struct DatumMismatch : Error {
  using Error::Error;
};

Int dot(const Weight& w, const Coweight& v);

std::string format_coords(const Vec& v);

}  // namespace satake
