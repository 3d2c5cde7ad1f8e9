#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <vector>

#include "satake/types.hpp"

namespace satake {

using Rat = boost::rational<Int>;

// Unique rational solution x of sum_k x[k] * columns[k] = target, where the
// columns are vectors of common length. Returns nullopt when the system is
// inconsistent or the columns are dependent (no unique solution).
std::optional<std::vector<Rat>> solve_columns(const std::vector<Vec>& columns, const Vec& target);

// Rank over the rationals of the given row vectors.
int rational_rank(const std::vector<Vec>& rows);

// Determinants of the leading principal k x k submatrices, k = 1..m.size().
// Exact (fraction-free elimination on 128-bit intermediates).
std::vector<Int> leading_principal_minors(const std::vector<Vec>& m);

inline bool is_integer(const Rat& q) { return q.denominator() == 1; }

}  // namespace satake
