#include "satake/weyl.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <unordered_map>

#include "satake/rational.hpp"

namespace satake {

namespace {

struct Geometry {
  int n = 0;
  int r = 0;
  std::vector<Vec> simple_roots;
  std::vector<Vec> simple_coroots;
  std::vector<Weight> pos_roots;
  std::vector<Vec> pos_roots_simple;
  std::vector<Coweight> pos_coroots;
  std::vector<Vec> pos_coroots_simple;
  Weight two_rho;
  Coweight two_rho_check;
  WeylWord longest;
};

Int dot_vec(const Vec& a, const Vec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Orbit of the simple vectors under the simple reflections, tracking the
// coordinates in the simple basis; a vector is positive iff those coordinates
// are all nonnegative. `acting` are the vectors whose pairing drives the
// reflection of `moving` (roots act on coroot-side vectors and vice versa).
void enumerate_positive(const std::vector<Vec>& moving, const std::vector<Vec>& acting,
                        std::vector<Vec>& out_ambient, std::vector<Vec>& out_simple) {
  const int r = static_cast<int>(moving.size());
  std::map<Vec, Vec> seen;  // ambient -> simple-basis coords
  std::vector<Vec> queue;
  for (int i = 0; i < r; ++i) {
    Vec simple(r, 0);
    simple[i] = 1;
    seen.emplace(moving[i], simple);
    queue.push_back(moving[i]);
  }
  while (!queue.empty()) {
    Vec v = queue.back();
    queue.pop_back();
    const Vec coords = seen.at(v);
    for (int i = 0; i < r; ++i) {
      const Int pairing = dot_vec(acting[i], v);
      if (pairing == 0) continue;
      Vec w = v;
      for (size_t t = 0; t < w.size(); ++t) w[t] -= pairing * moving[i][t];
      Vec wc = coords;
      wc[i] -= pairing;
      auto [it, inserted] = seen.emplace(std::move(w), std::move(wc));
      if (inserted) queue.push_back(it->first);
    }
  }
  for (const auto& [ambient, simple] : seen) {
    if (std::all_of(simple.begin(), simple.end(), [](Int c) { return c >= 0; })) {
      out_ambient.push_back(ambient);
      out_simple.push_back(simple);
    }
  }
}

Int height_of(const Geometry& g, const Vec& v) { return dot_vec(g.two_rho.coords, v); }

Vec reflect_vec(const std::vector<Vec>& acting, const std::vector<Vec>& moving, int i,
                const Vec& v) {
  const Int pairing = dot_vec(acting[i], v);
  Vec out = v;
  for (size_t t = 0; t < out.size(); ++t) out[t] -= pairing * moving[i][t];
  return out;
}

std::unique_ptr<Geometry> build_geometry(const RootDatum& d) {
  validate_or_throw(d);
  auto g = std::make_unique<Geometry>();
  g->n = d.lattice_rank;
  g->r = d.semisimple_rank;
  g->simple_roots = d.simple_roots;
  g->simple_coroots = d.simple_coroots;

  std::vector<Vec> roots_amb, roots_simple, coroots_amb, coroots_simple;
  enumerate_positive(d.simple_roots, d.simple_coroots, roots_amb, roots_simple);
  enumerate_positive(d.simple_coroots, d.simple_roots, coroots_amb, coroots_simple);
  if (roots_amb.size() != coroots_amb.size())
    throw InternalError("positive root and coroot counts differ");

  g->two_rho = Weight(Vec(g->n, 0));
  for (const auto& root : roots_amb) g->two_rho.coords = add(g->two_rho.coords, root);
  g->two_rho_check = Coweight(Vec(g->n, 0));
  for (const auto& coroot : coroots_amb) g->two_rho_check.coords = add(g->two_rho_check.coords, coroot);
  for (int i = 0; i < g->r; ++i) {
    if (dot_vec(g->two_rho.coords, d.simple_coroots[i]) != 2)
      throw InternalError("two_rho does not pair to 2 with a simple coroot");
    if (dot_vec(d.simple_roots[i], g->two_rho_check.coords) != 2)
      throw InternalError("two_rho_check does not pair to 2 with a simple root");
  }

  // Sort the positive systems by (height, lex) for deterministic iteration.
  auto order = [&](const std::vector<Vec>& amb) {
    std::vector<size_t> idx(amb.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
      const Int ha = height_of(*g, amb[a]), hb = height_of(*g, amb[b]);
      if (ha != hb) return ha < hb;
      return amb[a] < amb[b];
    });
    return idx;
  };
  // Root heights are measured against two_rho_check; reuse height_of by
  // swapping sides where needed.
  {
    std::vector<size_t> idx(roots_amb.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
      const Int ha = dot_vec(roots_amb[a], g->two_rho_check.coords);
      const Int hb = dot_vec(roots_amb[b], g->two_rho_check.coords);
      if (ha != hb) return ha < hb;
      return roots_amb[a] < roots_amb[b];
    });
    for (size_t i : idx) {
      g->pos_roots.emplace_back(roots_amb[i]);
      g->pos_roots_simple.push_back(roots_simple[i]);
    }
  }
  {
    const auto idx = order(coroots_amb);
    for (size_t i : idx) {
      g->pos_coroots.emplace_back(coroots_amb[i]);
      g->pos_coroots_simple.push_back(coroots_simple[i]);
    }
  }

  // Longest element: the greedy ascent from -2*rho_check, which is regular
  // antidominant; the collected word is reduced of length |Phi+|.
  Vec v = negated(g->two_rho_check.coords);
  WeylWord w0;
  for (;;) {
    int violated = -1;
    for (int i = 0; i < g->r; ++i) {
      if (dot_vec(d.simple_roots[i], v) < 0) {
        violated = i;
        break;
      }
    }
    if (violated < 0) break;
    v = reflect_vec(d.simple_roots, d.simple_coroots, violated, v);
    w0.letters.push_back(violated);
  }
  if (w0.letters.size() != g->pos_roots.size())
    throw InternalError("longest word length differs from the positive root count");
  w0.reduced = true;
  g->longest = std::move(w0);
  return g;
}

const Geometry& geometry(const RootDatum& d) {
  static std::mutex mu;
  static std::unordered_map<std::string, std::unique_ptr<Geometry>> registry;
  const std::string key = canonical_key(d);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(key);
    if (it != registry.end()) return *it->second;
  }
  auto built = build_geometry(d);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = registry.emplace(key, std::move(built));
  return *it->second;
}

void check_rank(const Geometry& g, const Vec& v) {
  if (static_cast<int>(v.size()) != g.n) throw DomainError("coordinate vector of wrong lattice rank");
}

}  // namespace

const std::vector<Weight>& positive_roots(const RootDatum& d) { return geometry(d).pos_roots; }

const std::vector<Coweight>& positive_coroots(const RootDatum& d) { return geometry(d).pos_coroots; }

const std::vector<Vec>& positive_root_simple_coords(const RootDatum& d) {
  return geometry(d).pos_roots_simple;
}

const std::vector<Vec>& positive_coroot_simple_coords(const RootDatum& d) {
  return geometry(d).pos_coroots_simple;
}

const Weight& two_rho(const RootDatum& d) { return geometry(d).two_rho; }

const Coweight& two_rho_check(const RootDatum& d) { return geometry(d).two_rho_check; }

Int doubled_height(const RootDatum& d, const Coweight& v) {
  const Geometry& g = geometry(d);
  check_rank(g, v.coords);
  return dot_vec(g.two_rho.coords, v.coords);
}

bool is_dominant(const RootDatum& d, const Coweight& v) {
  const Geometry& g = geometry(d);
  check_rank(g, v.coords);
  for (int i = 0; i < g.r; ++i)
    if (dot_vec(g.simple_roots[i], v.coords) < 0) return false;
  return true;
}

Coweight reflect(const RootDatum& d, int i, const Coweight& v) {
  const Geometry& g = geometry(d);
  check_rank(g, v.coords);
  if (i < 0 || i >= g.r) throw DomainError("simple reflection index out of range");
  return Coweight(reflect_vec(g.simple_roots, g.simple_coroots, i, v.coords));
}

Weight reflect(const RootDatum& d, int i, const Weight& w) {
  const Geometry& g = geometry(d);
  check_rank(g, w.coords);
  if (i < 0 || i >= g.r) throw DomainError("simple reflection index out of range");
  return Weight(reflect_vec(g.simple_coroots, g.simple_roots, i, w.coords));
}

Coweight apply_word(const RootDatum& d, const WeylWord& word, Coweight v) {
  for (int letter : word.letters) v = reflect(d, letter, v);
  return v;
}

std::pair<Coweight, WeylWord> dominant_representative(const RootDatum& d, const Coweight& v) {
  const Geometry& g = geometry(d);
  check_rank(g, v.coords);
  Vec cur = v.coords;
  WeylWord word;
  for (;;) {
    int violated = -1;
    for (int i = 0; i < g.r; ++i) {
      if (dot_vec(g.simple_roots[i], cur) < 0) {
        violated = i;
        break;
      }
    }
    if (violated < 0) break;
    cur = reflect_vec(g.simple_roots, g.simple_coroots, violated, cur);
    word.letters.push_back(violated);
  }
  word.reduced = true;  // each step removes exactly one inversion
  return {Coweight(std::move(cur)), std::move(word)};
}

const WeylWord& longest_word(const RootDatum& d) { return geometry(d).longest; }

Coweight longest_element_image(const RootDatum& d, const Coweight& v) {
  return apply_word(d, longest_word(d), v);
}

Int word_length(const RootDatum& d, const WeylWord& word) {
  const Geometry& g = geometry(d);
  Int inversions = 0;
  for (const auto& root : g.pos_roots) {
    Vec image = root.coords;
    // Image of a positive root under the word's element (letters applied
    // first to last, the same composite as apply_word).
    for (int letter : word.letters) {
      if (letter < 0 || letter >= g.r) throw DomainError("word letter out of range");
      image = reflect_vec(g.simple_coroots, g.simple_roots, letter, image);
    }
    // Sign of a root: the sign of its height against two_rho_check.
    const Int h = dot_vec(image, g.two_rho_check.coords);
    if (h < 0) ++inversions;
  }
  return inversions;
}

bool is_reduced(const RootDatum& d, const WeylWord& word) {
  return word_length(d, word) == static_cast<Int>(word.letters.size());
}

bool mark_reduced(const RootDatum& d, WeylWord& word) {
  word.reduced = is_reduced(d, word);
  return word.reduced;
}

bool dominance_leq(const RootDatum& d, const Coweight& nu, const Coweight& lambda) {
  const Geometry& g = geometry(d);
  check_rank(g, nu.coords);
  check_rank(g, lambda.coords);
  auto coords = coroot_lattice_coords(d, Coweight(sub(lambda.coords, nu.coords)));
  if (!coords) return false;
  return std::all_of(coords->begin(), coords->end(), [](Int c) { return c >= 0; });
}

namespace {

std::map<Vec, int> orbit_with_signs(const RootDatum& d, const Vec& start, Int cap,
                                    bool track_signs) {
  const Geometry& g = geometry(d);
  std::map<Vec, int> seen;
  std::vector<const Vec*> queue;
  auto [it0, ignored] = seen.emplace(start, +1);
  queue.push_back(&it0->first);
  while (!queue.empty()) {
    const Vec v = *queue.back();
    queue.pop_back();
    const int sign = seen.at(v);
    for (int i = 0; i < g.r; ++i) {
      const Int pairing = dot_vec(g.simple_roots[i], v);
      if (pairing == 0) continue;
      Vec w = v;
      for (size_t t = 0; t < w.size(); ++t) w[t] -= pairing * g.simple_coroots[i][t];
      auto [it, inserted] = seen.emplace(std::move(w), -sign);
      if (inserted) {
        if (static_cast<Int>(seen.size()) > cap)
          throw ResourceError("Weyl group too large: orbit enumeration exceeded the cap of " +
                              std::to_string(cap));
        queue.push_back(&it->first);
      } else if (track_signs && it->second != -sign) {
        throw InternalError("inconsistent orbit signs; the seed was not regular");
      }
    }
  }
  return seen;
}

}  // namespace

Int weyl_group_order(const RootDatum& d, Int cap) {
  const Geometry& g = geometry(d);
  const auto orbit = orbit_with_signs(d, g.two_rho_check.coords, cap, false);
  return static_cast<Int>(orbit.size());
}

std::vector<Coweight> weyl_orbit(const RootDatum& d, const Coweight& v, Int cap) {
  const Geometry& g = geometry(d);
  check_rank(g, v.coords);
  const auto orbit = orbit_with_signs(d, v.coords, cap, false);
  std::vector<Coweight> out;
  out.reserve(orbit.size());
  for (const auto& [vec, sign] : orbit) out.emplace_back(vec);
  return out;
}

std::vector<std::pair<Coweight, int>> signed_weyl_orbit(const RootDatum& d,
                                                        const Coweight& regular, Int cap) {
  const Geometry& g = geometry(d);
  check_rank(g, regular.coords);
  for (int i = 0; i < g.r; ++i) {
    if (dot_vec(g.simple_roots[i], regular.coords) <= 0)
      throw DomainError("signed orbit requires a strictly dominant seed");
  }
  const auto orbit = orbit_with_signs(d, regular.coords, cap, true);
  std::vector<std::pair<Coweight, int>> out;
  out.reserve(orbit.size());
  for (const auto& [vec, sign] : orbit) out.emplace_back(Coweight(vec), sign);
  return out;
}

std::vector<Coweight> dominant_coweights_up_to_height(const RootDatum& d, Int bound, Int cap) {
  const Geometry& g = geometry(d);
  if (bound < 0) throw DomainError("height bound must be nonnegative");
  const int r = g.r;

  // Rational fundamental coweights inside the coroot span and their heights;
  // the height of the i-th one is the alpha_i-coefficient sum over Phi+.
  std::vector<std::vector<Rat>> fw(r, std::vector<Rat>(g.n, Rat(0)));
  std::vector<Int> fw_height(r, 0);
  if (r > 0) {
    std::vector<Vec> cartan_cols(r, Vec(r));
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        cartan_cols[a][b] = dot_vec(g.simple_roots[b], g.simple_coroots[a]);
    for (int i = 0; i < r; ++i) {
      Vec e(r, 0);
      e[i] = 1;
      auto c = solve_columns(cartan_cols, e);
      if (!c) throw InternalError("cartan matrix not invertible on a validated datum");
      for (int k = 0; k < r; ++k)
        for (int t = 0; t < g.n; ++t) fw[i][t] += (*c)[k] * Rat(g.simple_coroots[k][t]);
      for (const auto& simple : g.pos_roots_simple) fw_height[i] += simple[i];
    }
  }

  std::vector<Coweight> out;
  std::vector<Int> a(r, 0);
  // Depth-first sweep over nonnegative pairing vectors with bounded height.
  auto rec = [&](auto&& self, int idx, Int used) -> void {
    if (idx == r) {
      std::vector<Rat> coords(g.n, Rat(0));
      for (int i = 0; i < r; ++i)
        for (int t = 0; t < g.n; ++t) coords[t] += Rat(a[i]) * fw[i][t];
      Vec v(g.n);
      for (int t = 0; t < g.n; ++t) {
        if (!is_integer(coords[t])) return;
        v[t] = coords[t].numerator();
      }
      out.emplace_back(std::move(v));
      if (static_cast<Int>(out.size()) > cap)
        throw ResourceError("dominant coweight enumeration exceeded the cap of " +
                            std::to_string(cap));
      return;
    }
    for (Int c = 0; used + c * fw_height[idx] <= bound; ++c) {
      a[idx] = c;
      self(self, idx + 1, used + c * fw_height[idx]);
    }
    a[idx] = 0;
  };
  rec(rec, 0, 0);

  std::sort(out.begin(), out.end(), [&](const Coweight& x, const Coweight& y) {
    const Int hx = doubled_height(d, x), hy = doubled_height(d, y);
    if (hx != hy) return hx < hy;
    return x.coords < y.coords;
  });
  return out;
}

}  // namespace satake
