#include "satake/checks.hpp"

#include <algorithm>

#include "satake/fusion.hpp"
#include "satake/grassmannian.hpp"
#include "satake/weyl.hpp"

namespace satake {

namespace {

// Every coweight of the form lambda minus a nonnegative integer coroot
// combination, down to the height floor -height(lambda); contains the full
// weight support of the lambda-irreducible plus genuine zero cases.
std::vector<Coweight> weight_box(const RootDatum& d, const Coweight& lambda) {
  const int r = d.semisimple_rank;
  const Int height_bound = doubled_height(d, lambda);
  std::vector<Coweight> out;
  auto rec = [&](auto&& self, int idx, Vec v, Int h) -> void {
    if (idx == r) {
      out.emplace_back(std::move(v));
      return;
    }
    for (;;) {
      self(self, idx + 1, v, h);
      h -= 2;
      if (h < -height_bound) break;
      for (size_t t = 0; t < v.size(); ++t) v[t] -= d.simple_coroots[idx][t];
    }
  };
  rec(rec, 0, lambda.coords, height_bound);
  std::sort(out.begin(), out.end());
  return out;
}

Vec dominize(const RootDatum& d, Vec v) {
  for (;;) {
    int violated = -1;
    for (int i = 0; i < d.semisimple_rank; ++i) {
      Int p = 0;
      for (size_t t = 0; t < v.size(); ++t) p += d.simple_roots[i][t] * v[t];
      if (p < 0) {
        violated = i;
        break;
      }
    }
    if (violated < 0) return v;
    Int p = 0;
    for (size_t t = 0; t < v.size(); ++t) p += d.simple_roots[violated][t] * v[t];
    for (size_t t = 0; t < v.size(); ++t) v[t] -= p * d.simple_coroots[violated][t];
  }
}

struct Outcome {
  Int cases = 0;
  std::string first_failure;
  void count() { ++cases; }
  void fail(const std::string& what) {
    if (first_failure.empty()) first_failure = what;
  }
  CheckResult result(const std::string& name) const {
    CheckResult r;
    r.name = name;
    r.pass = first_failure.empty();
    r.cases = cases;
    r.detail = r.pass ? "checked " + std::to_string(cases) + " cases" : first_failure;
    return r;
  }
};

}  // namespace

std::vector<CheckResult> run_invariant_suite(const RootDatum& d, Int height_bound, Int weyl_cap,
                                             PartitionCache* cache) {
  validate_or_throw(d);
  if (height_bound < 0) throw DomainError("height bound must be nonnegative");

  const auto lambdas = dominant_coweights_up_to_height(d, height_bound);

  Outcome two_algorithms, sum_rule, intersection, grading_counts, semismall, rigidity;
  CharacterCache characters;

  std::map<Vec, std::map<Vec, Int>> freudenthal_tables;
  auto freudenthal_of = [&](const Coweight& lambda) -> const std::map<Vec, Int>& {
    auto it = freudenthal_tables.find(lambda.coords);
    if (it == freudenthal_tables.end())
      it = freudenthal_tables.emplace(lambda.coords, dominant_weight_multiplicities(d, lambda))
               .first;
    return it->second;
  };

  for (const auto& lambda : lambdas) {
    const std::string ltag = "lambda=" + format_coords(lambda.coords);
    const auto& dominant_mults = freudenthal_of(lambda);
    const auto box = weight_box(d, lambda);
    const Int dim_lambda = orbit_dim(d, lambda);

    Int table_sum = 0;
    std::map<Int, Int> counts_by_height;
    for (const auto& nu : box) {
      const std::string tag = ltag + " nu=" + format_coords(nu.coords);
      const Int m_kostant = weight_multiplicity_kostant(d, lambda, nu, cache, weyl_cap);
      auto it = dominant_mults.find(dominize(d, nu.coords));
      const bool support_test = dominance_leq(d, Coweight(dominize(d, nu.coords)), lambda);
      const Int m_freudenthal = (support_test && it != dominant_mults.end()) ? it->second : 0;

      two_algorithms.count();
      if (m_kostant != m_freudenthal) two_algorithms.fail(tag);

      table_sum += m_kostant;
      if (m_kostant > 0) counts_by_height[doubled_height(d, nu)] += m_kostant;

      intersection.count();
      const auto s_dim = s_intersection_dim(d, nu, lambda, cache, weyl_cap);
      const auto t_dim = t_intersection_dim(d, nu, lambda, cache, weyl_cap);
      const bool nonzero = m_kostant > 0;
      if (s_dim.has_value() != nonzero || t_dim.has_value() != nonzero ||
          support_test != nonzero) {
        intersection.fail(tag + " (emptiness disagreement)");
      } else if (nonzero) {
        if (*s_dim + *t_dim != dim_lambda) intersection.fail(tag + " (dimension sum)");
        if (2 * *s_dim != doubled_height(d, nu) + dim_lambda)
          intersection.fail(tag + " (height formula)");
        if (*s_dim > dim_lambda || (*s_dim == dim_lambda && nu != lambda))
          intersection.fail(tag + " (vanishing bound)");
      }
    }

    sum_rule.count();
    if (table_sum != weyl_dimension(d, lambda)) sum_rule.fail(ltag);

    grading_counts.count();
    const auto grading = fiber_functor_grading(d, lambda, weyl_cap);
    if (grading.entries != counts_by_height) grading_counts.fail(ltag);
  }

  for (size_t i = 0; i < lambdas.size(); ++i) {
    for (size_t j = i; j < lambdas.size(); ++j) {
      const Coweight& lambda = lambdas[i];
      const Coweight& mu = lambdas[j];
      const std::string ptag =
          "lambda=" + format_coords(lambda.coords) + " mu=" + format_coords(mu.coords);
      const Coweight sum = lambda + mu;
      const auto strata = dominant_weights_below(d, sum);

      for (const auto& nu : strata) {
        semismall.count();
        if (semismall_defect(d, lambda, mu, nu) != 0)
          semismall.fail(ptag + " nu=" + format_coords(nu.coords) + " (defect)");
        const auto fiber = convolution_fiber_dim(d, lambda, mu, nu);
        if (!fiber)
          semismall.fail(ptag + " nu=" + format_coords(nu.coords) + " (fiber undefined)");
      }
      for (size_t a = 0; a < strata.size(); ++a) {
        for (size_t b = 0; b < strata.size(); ++b) {
          if (a == b || !dominance_leq(d, strata[a], strata[b])) continue;
          semismall.count();
          const auto fa = convolution_fiber_dim(d, lambda, mu, strata[a]);
          const auto fb = convolution_fiber_dim(d, lambda, mu, strata[b]);
          if (!fa || !fb || *fa > *fb)
            semismall.fail(ptag + " nu=" + format_coords(strata[a].coords) + "<=" +
                           format_coords(strata[b].coords) + " (monotonicity)");
        }
      }

      rigidity.count();
      const auto table = tensor_decompose(d, lambda, mu, weyl_cap, &characters);
      const Int identity_mult = table.multiplicity_of(Coweight(Vec(d.lattice_rank, 0)));
      const Int expected = (mu == dual_object(d, lambda)) ? 1 : 0;
      if (identity_mult != expected) rigidity.fail(ptag);
    }
  }

  std::vector<CheckResult> results;
  results.push_back(two_algorithms.result("multiplicity_two_algorithms"));
  results.push_back(sum_rule.result("weight_sum_rule"));
  results.push_back(intersection.result("intersection_dim_consistency"));
  results.push_back(grading_counts.result("grading_matches_cycle_counts"));
  results.push_back(semismall.result("semismall_defect_and_fiber_bound"));
  results.push_back(rigidity.result("rigidity_identity_multiplicity"));
  return results;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

}  // namespace satake
