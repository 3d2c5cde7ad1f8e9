#pragma once

#include <utility>
#include <vector>

#include "satake/root_datum.hpp"
#include "satake/types.hpp"

namespace satake {

// Refusal threshold for full Weyl group / orbit enumeration.
inline constexpr Int kDefaultWeylCap = 1'000'000;

// Derived root-system data is computed once per datum and kept in a
// process-wide registry guarded by a mutex; the returned references stay
// valid for the lifetime of the process. All functions validate the datum on
// first sight and throw ValidationError if it is broken.

// Positive roots / coroots, sorted by (doubled height, lex) ascending.
const std::vector<Weight>& positive_roots(const RootDatum& d);
const std::vector<Coweight>& positive_coroots(const RootDatum& d);

// Coordinates of the positive (co)roots in the simple (co)root basis, in the
// same order as the ambient lists.
const std::vector<Vec>& positive_root_simple_coords(const RootDatum& d);
const std::vector<Vec>& positive_coroot_simple_coords(const RootDatum& d);

// Sum of all positive roots; pairs to 2 with every simple coroot.
const Weight& two_rho(const RootDatum& d);
// Sum of all positive coroots; pairs to 2 with every simple root.
const Coweight& two_rho_check(const RootDatum& d);

// <2*rho, v>: twice the height of v. Kept doubled so it is integral on every
// datum; vanishes on central directions.
Int doubled_height(const RootDatum& d, const Coweight& v);

bool is_dominant(const RootDatum& d, const Coweight& v);

// Simple reflection s_i, 0-based index. Throws DomainError if out of range.
Coweight reflect(const RootDatum& d, int i, const Coweight& v);
Weight reflect(const RootDatum& d, int i, const Weight& w);

// Applies the word letter by letter, first letter first.
Coweight apply_word(const RootDatum& d, const WeylWord& word, Coweight v);

// The dominant element of W*v together with a word mapping v to it. Always
// reflects at the smallest violated simple index, so the word is
// deterministic (and reduced).
std::pair<Coweight, WeylWord> dominant_representative(const RootDatum& d, const Coweight& v);

// Reduced word for the longest element w0.
const WeylWord& longest_word(const RootDatum& d);

// w0 * v for the longest element w0.
Coweight longest_element_image(const RootDatum& d, const Coweight& v);

// True length of the word's element, counted as the number of positive roots
// it sends to negative roots.
Int word_length(const RootDatum& d, const WeylWord& word);
bool is_reduced(const RootDatum& d, const WeylWord& word);
// Sets word.reduced after an actual verification; returns the verdict.
bool mark_reduced(const RootDatum& d, WeylWord& word);

// True iff lambda - nu is a nonnegative integer combination of simple
// coroots. Implies doubled_height(nu) <= doubled_height(lambda).
bool dominance_leq(const RootDatum& d, const Coweight& nu, const Coweight& lambda);

// |W| by orbit enumeration of a regular element; throws ResourceError
// ("Weyl group too large") beyond the cap.
Int weyl_group_order(const RootDatum& d, Int cap = kDefaultWeylCap);

// Full W-orbit of v, sorted; capped.
std::vector<Coweight> weyl_orbit(const RootDatum& d, const Coweight& v, Int cap = kDefaultWeylCap);

// Orbit of a strictly dominant (regular) element with the determinant sign of
// the group element reaching each point. Throws DomainError when the seed is
// not strictly dominant and ResourceError beyond the cap.
std::vector<std::pair<Coweight, int>> signed_weyl_orbit(const RootDatum& d, const Coweight& regular,
                                                        Int cap = kDefaultWeylCap);

// All dominant coweights inside the rational span of the simple coroots with
// doubled height <= bound, sorted by (doubled height, lex). Central
// translates (which would be infinite in number) are excluded by
// construction. Throws ResourceError beyond the cap.
std::vector<Coweight> dominant_coweights_up_to_height(const RootDatum& d, Int bound,
                                                      Int cap = 100'000);

}  // namespace satake
