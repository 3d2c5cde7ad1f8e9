#include "satake/rational.hpp"

#include <algorithm>

namespace satake {

namespace {

using RatRow = std::vector<Rat>;

// Row echelon elimination in place; returns the pivot column of each
// eliminated row. aug is m x c.
std::vector<int> eliminate(std::vector<RatRow>& aug, int cols) {
  std::vector<int> pivots;
  int row = 0;
  const int m = static_cast<int>(aug.size());
  for (int col = 0; col < cols && row < m; ++col) {
    int p = -1;
    for (int i = row; i < m; ++i) {
      if (aug[i][col] != Rat(0)) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(aug[row], aug[p]);
    const Rat inv = Rat(1) / aug[row][col];
    for (auto& x : aug[row]) x *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      const Rat f = aug[i][col];
      if (f == Rat(0)) continue;
      for (size_t j = col; j < aug[i].size(); ++j) aug[i][j] -= f * aug[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<Rat>> solve_columns(const std::vector<Vec>& columns, const Vec& target) {
  const int k = static_cast<int>(columns.size());
  const int m = static_cast<int>(target.size());
  if (k == 0) {
    if (is_zero(target)) return std::vector<Rat>{};
    return std::nullopt;
  }
  std::vector<RatRow> aug(m, RatRow(k + 1, Rat(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) aug[i][j] = Rat(columns[j][i]);
    aug[i][k] = Rat(target[i]);
  }
  const std::vector<int> pivots = eliminate(aug, k);
  if (static_cast<int>(pivots.size()) < k) return std::nullopt;  // dependent columns
  // Consistency: rows past the pivots must be identically zero.
  for (int i = k; i < m; ++i) {
    if (aug[i][k] != Rat(0)) return std::nullopt;
  }
  std::vector<Rat> x(k, Rat(0));
  for (int i = 0; i < k; ++i) x[pivots[i]] = aug[i][k];
  return x;
}

int rational_rank(const std::vector<Vec>& rows) {
  if (rows.empty()) return 0;
  const int cols = static_cast<int>(rows[0].size());
  std::vector<RatRow> a(rows.size(), RatRow(cols, Rat(0)));
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = Rat(rows[i][j]);
  return static_cast<int>(eliminate(a, cols).size());
}

std::vector<Int> leading_principal_minors(const std::vector<Vec>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<Int> minors;
  minors.reserve(n);
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<__int128>> a(k, std::vector<__int128>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) a[i][j] = m[i][j];
    // Bareiss fraction-free elimination.
    __int128 prev = 1;
    int sign = 1;
    bool singular = false;
    for (int i = 0; i < k - 1 && !singular; ++i) {
      if (a[i][i] == 0) {
        int p = -1;
        for (int t = i + 1; t < k; ++t) {
          if (a[t][i] != 0) {
            p = t;
            break;
          }
        }
        if (p < 0) {
          singular = true;
          break;
        }
        std::swap(a[i], a[p]);
        sign = -sign;
      }
      for (int r = i + 1; r < k; ++r) {
        for (int c = i + 1; c < k; ++c) {
          a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
        }
        a[r][i] = 0;
      }
      prev = a[i][i];
    }
    const __int128 det = singular ? 0 : sign * a[k - 1][k - 1];
    minors.push_back(static_cast<Int>(det));
  }
  return minors;
}

}  // namespace satake
