#include "satake/multiplicity.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace satake {

namespace {

Int dot_vec(const Vec& a, const Vec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string fingerprint_hex(const RootDatum& d) {
  std::ostringstream os;
  os << std::hex << datum_fingerprint(d);
  return os.str();
}

// Dominant representative without word bookkeeping; the hot-loop variant.
Vec dominize(const RootDatum& d, Vec v) {
  const auto& roots = d.simple_roots;
  for (;;) {
    int violated = -1;
    for (size_t i = 0; i < roots.size(); ++i) {
      if (dot_vec(roots[i], v) < 0) {
        violated = static_cast<int>(i);
        break;
      }
    }
    if (violated < 0) return v;
    const Int pairing = dot_vec(roots[violated], v);
    for (size_t t = 0; t < v.size(); ++t) v[t] -= pairing * d.simple_coroots[violated][t];
  }
}

bool in_weight_support(const RootDatum& d, const Coweight& lambda, const Coweight& nu) {
  return dominance_leq(d, Coweight(dominize(d, nu.coords)), lambda);
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a == 0 ? 1 : a;
}

struct PartitionSolver {
  const std::vector<Vec>& coroots_simple;  // nonnegative coordinate vectors
  const std::string& fp;
  PartitionCache& cache;

  Int count(size_t k, const Vec& c) {
    if (std::all_of(c.begin(), c.end(), [](Int x) { return x == 0; })) return 1;
    if (k == 0) return 0;
    std::string key = fp;
    key += ':';
    key += std::to_string(k);
    key += ':';
    key += format_coords(c);
    auto it = cache.transient.find(key);
    if (it != cache.transient.end()) return it->second;
    const Vec& gamma = coroots_simple[k - 1];
    Int total = 0;
    Vec rest = c;
    for (;;) {
      total += count(k - 1, rest);
      bool ok = true;
      for (size_t t = 0; t < rest.size(); ++t) {
        rest[t] -= gamma[t];
        if (rest[t] < 0) ok = false;
      }
      if (!ok) break;
    }
    cache.transient.emplace(std::move(key), total);
    return total;
  }
};

}  // namespace

Int kostant_partition(const RootDatum& d, const Coweight& beta, PartitionCache* cache) {
  PartitionCache local;
  PartitionCache& store = cache ? *cache : local;
  const auto coords = coroot_lattice_coords(d, beta);
  if (!coords) return 0;
  if (std::any_of(coords->begin(), coords->end(), [](Int c) { return c < 0; })) return 0;
  const std::string fp = fingerprint_hex(d);
  const std::string final_key = fp + ":" + format_coords(*coords);
  auto it = store.finals.find(final_key);
  if (it != store.finals.end()) return it->second;
  const auto& coroots_simple = positive_coroot_simple_coords(d);
  PartitionSolver solver{coroots_simple, fp, store};
  const Int value = solver.count(coroots_simple.size(), *coords);
  store.finals.emplace(final_key, value);
  return value;
}

Int weight_multiplicity_kostant(const RootDatum& d, const Coweight& lambda, const Coweight& nu,
                                PartitionCache* cache, Int weyl_cap) {
  if (!is_dominant(d, lambda)) throw DomainError("highest weight must be dominant");
  if (nu.coords.size() != lambda.coords.size())
    throw DomainError("coweights of different lattice rank");
  if (!in_weight_support(d, lambda, nu)) return 0;

  const Vec two_rho_chk = two_rho_check(d).coords;
  const Vec shifted = add(scaled(lambda.coords, 2), two_rho_chk);
  const Vec target = add(scaled(nu.coords, 2), two_rho_chk);
  const auto orbit = signed_weyl_orbit(d, Coweight(shifted), weyl_cap);

  Int total = 0;
  Vec beta(shifted.size());
  for (const auto& [point, sign] : orbit) {
    for (size_t t = 0; t < beta.size(); ++t) {
      const Int diff = point.coords[t] - target[t];
      if (diff % 2 != 0)
        throw InternalError("odd coordinate in a rho-shifted orbit difference");
      beta[t] = diff / 2;
    }
    total += sign * kostant_partition(d, Coweight(beta), cache);
  }
  if (total < 0) throw InternalError("negative alternating multiplicity sum");
  return total;
}

Int weight_multiplicity(const RootDatum& d, const Coweight& lambda, const Coweight& nu,
                        PartitionCache* cache, Int weyl_cap) {
  return weight_multiplicity_kostant(d, lambda, nu, cache, weyl_cap);
}

Int weyl_dimension(const RootDatum& d, const Coweight& lambda) {
  if (!is_dominant(d, lambda)) throw DomainError("highest weight must be dominant");
  const Vec two_rho_chk = two_rho_check(d).coords;
  const Vec shifted = add(scaled(lambda.coords, 2), two_rho_chk);
  constexpr __int128 kLimit = (static_cast<__int128>(1) << 120);
  __int128 num = 1, den = 1;
  for (const auto& root : positive_roots(d)) {
    __int128 a = dot_vec(root.coords, shifted);
    __int128 b = dot_vec(root.coords, two_rho_chk);
    if (a <= 0 || b <= 0) throw InternalError("nonpositive factor in the dimension product");
    const __int128 g = gcd128(a, b);
    a /= g;
    b /= g;
    if (num > kLimit / a || den > kLimit / b)
      throw ResourceError("dimension product overflow");
    num *= a;
    den *= b;
    const __int128 g2 = gcd128(num, den);
    num /= g2;
    den /= g2;
  }
  if (den != 1) throw InternalError("dimension product is not an integer");
  if (num > std::numeric_limits<Int>::max())
    throw ResourceError("dimension does not fit in 64 bits");
  return static_cast<Int>(num);
}

std::vector<Coweight> dominant_weights_below(const RootDatum& d, const Coweight& lambda) {
  if (!is_dominant(d, lambda)) throw DomainError("highest weight must be dominant");
  const int r = d.semisimple_rank;
  const Int height_bound = doubled_height(d, lambda);
  std::vector<Coweight> out;
  Vec cur = lambda.coords;
  auto rec = [&](auto&& self, int idx, Vec v, Int h) -> void {
    if (idx == r) {
      if (is_dominant(d, Coweight(v))) out.emplace_back(std::move(v));
      return;
    }
    for (;;) {
      self(self, idx + 1, v, h);
      h -= 2;  // each simple coroot drops the doubled height by 2
      if (h < -height_bound) break;
      for (size_t t = 0; t < v.size(); ++t) v[t] -= d.simple_coroots[idx][t];
    }
  };
  rec(rec, 0, cur, height_bound);
  std::sort(out.begin(), out.end(), [&](const Coweight& a, const Coweight& b) {
    const Int ha = doubled_height(d, a), hb = doubled_height(d, b);
    if (ha != hb) return ha > hb;
    return a.coords < b.coords;
  });
  return out;
}

std::map<Vec, Int> dominant_weight_multiplicities(const RootDatum& d, const Coweight& lambda) {
  if (!is_dominant(d, lambda)) throw DomainError("highest weight must be dominant");
  const auto doms = dominant_weights_below(d, lambda);
  const auto form = InvariantForm::standard(d);
  const auto& coroots = positive_coroots(d);
  const Vec two_rho_chk = two_rho_check(d).coords;
  const Int lambda_height = doubled_height(d, lambda);

  const Rat top_norm = form.norm(add(scaled(lambda.coords, 2), two_rho_chk));

  std::map<Vec, Int> table;
  table[lambda.coords] = 1;
  for (const auto& mu : doms) {
    if (mu.coords == lambda.coords) continue;
    Rat rhs(0);
    for (const auto& gamma : coroots) {
      const Int gamma_height = doubled_height(d, gamma);
      Vec xi = add(mu.coords, gamma.coords);
      for (Int h = doubled_height(d, mu) + gamma_height; h <= lambda_height;
           h += gamma_height) {
        const Vec dom = dominize(d, xi);
        auto it = table.find(dom);
        if (it != table.end()) rhs += Rat(it->second) * form.value(xi, gamma.coords);
        xi = add(xi, gamma.coords);
      }
    }
    const Rat denom = (top_norm - form.norm(add(scaled(mu.coords, 2), two_rho_chk))) / 4;
    if (denom <= Rat(0)) throw InternalError("nonpositive Freudenthal denominator");
    const Rat val = Rat(2) * rhs / denom;
    if (!is_integer(val) || val.numerator() <= 0)
      throw InternalError("Freudenthal recursion produced a non-positive-integer value");
    table[mu.coords] = val.numerator();
  }
  return table;
}

Int weight_multiplicity_freudenthal(const RootDatum& d, const Coweight& lambda,
                                    const Coweight& nu) {
  if (!is_dominant(d, lambda)) throw DomainError("highest weight must be dominant");
  if (nu.coords.size() != lambda.coords.size())
    throw DomainError("coweights of different lattice rank");
  if (!in_weight_support(d, lambda, nu)) return 0;
  const auto table = dominant_weight_multiplicities(d, lambda);
  auto it = table.find(dominize(d, nu.coords));
  return it == table.end() ? 0 : it->second;
}

DecompositionTable weight_table(const RootDatum& d, const Coweight& lambda, Int orbit_cap) {
  const auto dominant_part = dominant_weight_multiplicities(d, lambda);
  DecompositionTable out;
  for (const auto& [mu, mult] : dominant_part) {
    for (const auto& point : weyl_orbit(d, Coweight(mu), orbit_cap)) {
      out.entries[point.coords] = mult;
    }
  }
  return out;
}

InvariantForm InvariantForm::standard(const RootDatum& d) {
  validate_or_throw(d);
  const int r = d.semisimple_rank;
  const int n = d.lattice_rank;
  const auto cartan = cartan_matrix(d);

  // Coroot symmetrizers: minimal positive integers with
  // sym[i] * cartan(i,j) == sym[j] * cartan(j,i); 1 on short coroots.
  std::vector<Rat> ratio(r, Rat(0));
  std::vector<Int> sym(r, 1);
  std::vector<int> component(r, -1);
  int components = 0;
  for (int s = 0; s < r; ++s) {
    if (component[s] >= 0) continue;
    const int comp = components++;
    std::vector<int> stack{s};
    component[s] = comp;
    ratio[s] = Rat(1);
    std::vector<int> members{s};
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < r; ++j) {
        if (j == i || cartan[i][j] == 0) continue;
        const Rat rj = ratio[i] * Rat(cartan[i][j], cartan[j][i]);
        if (component[j] < 0) {
          component[j] = comp;
          ratio[j] = rj;
          members.push_back(j);
          stack.push_back(j);
        } else if (ratio[j] != rj) {
          throw InternalError("Cartan matrix is not symmetrizable");
        }
      }
    }
    Int lcm = 1;
    for (int m : members) lcm = std::lcm(lcm, ratio[m].denominator());
    Int gcd = 0;
    for (int m : members) gcd = std::gcd(gcd, ratio[m].numerator() * (lcm / ratio[m].denominator()));
    for (int m : members) sym[m] = ratio[m].numerator() * (lcm / ratio[m].denominator()) / gcd;
  }

  std::vector<std::vector<Rat>> coroot_gram(r, std::vector<Rat>(r, Rat(0)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) coroot_gram[i][j] = Rat(sym[i] * cartan[i][j]);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (coroot_gram[i][j] != coroot_gram[j][i])
        throw InternalError("coroot Gram matrix failed to symmetrize");

  // Split each standard basis vector e_a = s_a + z_a with s_a in the coroot
  // span and z_a central; c^a are the coroot-basis coordinates of s_a.
  std::vector<Vec> cartan_cols(r, Vec(r));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) cartan_cols[a][b] = cartan[b][a];
  std::vector<std::vector<Rat>> span_coords(n, std::vector<Rat>(r, Rat(0)));
  std::vector<std::vector<Rat>> central(n, std::vector<Rat>(n, Rat(0)));
  for (int a = 0; a < n; ++a) {
    Vec pairings(r);
    for (int i = 0; i < r; ++i) pairings[i] = d.simple_roots[i][a];
    if (r > 0) {
      auto c = solve_columns(cartan_cols, pairings);
      if (!c) throw InternalError("cartan matrix not invertible on a validated datum");
      span_coords[a] = *c;
    }
    std::vector<Rat> s(n, Rat(0));
    for (int k = 0; k < r; ++k)
      for (int t = 0; t < n; ++t) s[t] += span_coords[a][k] * Rat(d.simple_coroots[k][t]);
    for (int t = 0; t < n; ++t) central[a][t] = Rat(a == t ? 1 : 0) - s[t];
  }

  InvariantForm form;
  form.gram_.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      Rat v(0);
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) v += span_coords[a][k] * coroot_gram[k][l] * span_coords[b][l];
      for (int t = 0; t < n; ++t) v += central[a][t] * central[b][t];
      form.gram_[a][b] = form.gram_[b][a] = v;
    }
  }
  return form;
}

Rat InvariantForm::value(const Vec& u, const Vec& v) const {
  const size_t n = gram_.size();
  if (u.size() != n || v.size() != n) throw DomainError("form arguments of wrong lattice rank");
  Rat out(0);
  for (size_t a = 0; a < n; ++a) {
    if (u[a] == 0) continue;
    Rat row(0);
    for (size_t b = 0; b < n; ++b) {
      if (v[b] == 0) continue;
      row += gram_[a][b] * Rat(v[b]);
    }
    out += Rat(u[a]) * row;
  }
  return out;
}

}  // namespace satake
