#include "satake/fusion.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "satake/grassmannian.hpp"
#include "satake/weyl.hpp"

namespace satake {

namespace {

Int dot_vec(const Vec& a, const Vec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_datum(const RootDatum& d, const Character& c) {
  if (c.fingerprint() != datum_fingerprint(d))
    throw DatumMismatch("character belongs to a different root datum");
}

bool w_invariant(const RootDatum& d, const std::map<Vec, Int>& terms) {
  for (const auto& [v, coeff] : terms) {
    for (int i = 0; i < d.semisimple_rank; ++i) {
      const Vec image = reflect(d, i, Coweight(v)).coords;
      auto it = terms.find(image);
      const Int other = it == terms.end() ? 0 : it->second;
      if (other != coeff) return false;
    }
  }
  return true;
}

DecompositionTable decompose_with_memo(const RootDatum& d, const Character& c, Int orbit_cap,
                                       CharacterCache& memo) {
  check_datum(d, c);
  if (!w_invariant(d, c.terms()))
    throw DecompositionError("NonWInvariantInput: character terms are not W-invariant");

  const Vec& rho2 = two_rho(d).coords;
  std::map<Vec, Int> rem = c.terms();
  std::map<Vec, Int> found;
  while (!rem.empty()) {
    // Leading surviving term: maximal doubled height, then lexicographically
    // maximal. For a W-invariant map it is necessarily dominant.
    auto pivot_it = rem.begin();
    Int pivot_height = dot_vec(rho2, pivot_it->first);
    for (auto it = std::next(rem.begin()); it != rem.end(); ++it) {
      const Int h = dot_vec(rho2, it->first);
      if (h > pivot_height || (h == pivot_height && it->first > pivot_it->first)) {
        pivot_it = it;
        pivot_height = h;
      }
    }
    const Vec pivot = pivot_it->first;
    const Int mult = pivot_it->second;
    if (!is_dominant(d, Coweight(pivot)))
      throw InternalError("leading term of a W-invariant character is not dominant");
    found[pivot] = mult;
    const Character& chi = memo.irreducible(d, Coweight(pivot), orbit_cap);
    for (const auto& [v, m] : chi.terms()) {
      auto [it, inserted] = rem.try_emplace(v, 0);
      it->second -= mult * m;
      if (it->second == 0) rem.erase(it);
    }
  }

  DecompositionTable out;
  for (const auto& [v, m] : found) {
    if (m < 0)
      throw DecompositionError("NegativeMultiplicity: constituent " + format_coords(v) +
                               " has multiplicity " + std::to_string(m));
    out.entries.emplace(v, m);
  }
  return out;
}

GradedDims grading_of_terms(const RootDatum& d, const std::map<Vec, Int>& terms) {
  const Vec& rho2 = two_rho(d).coords;
  GradedDims out;
  for (const auto& [v, m] : terms) out.entries[dot_vec(rho2, v)] += m;
  return out;
}

}  // namespace

Character Character::irreducible(const RootDatum& d, const Coweight& lambda, Int orbit_cap) {
  const auto table = weight_table(d, lambda, orbit_cap);
  return Character(datum_fingerprint(d), d.lattice_rank, table.entries);
}

Character Character::from_terms(const RootDatum& d, std::map<Vec, Int> terms) {
  validate_or_throw(d);
  for (const auto& [v, coeff] : terms) {
    if (static_cast<int>(v.size()) != d.lattice_rank)
      throw DomainError("character term of wrong lattice rank");
    if (coeff < 0) throw DomainError("public characters have nonnegative coefficients");
  }
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  if (!w_invariant(d, terms))
    throw DecompositionError("NonWInvariantInput: character terms are not W-invariant");
  return Character(datum_fingerprint(d), d.lattice_rank, std::move(terms));
}

Character product(const Character& a, const Character& b) {
  if (a.fingerprint() != b.fingerprint() || a.lattice_rank() != b.lattice_rank())
    throw DatumMismatch("cannot multiply characters over different root data");
  std::map<Vec, Int> terms;
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      const Vec sum = add(u, v);
      auto [it, inserted] = terms.try_emplace(sum, 0);
      it->second += cu * cv;
      if (it->second == 0) terms.erase(it);
    }
  }
  return Character(a.fingerprint(), a.lattice_rank(), std::move(terms));
}

const Character& CharacterCache::irreducible(const RootDatum& d, const Coweight& lambda,
                                             Int orbit_cap) {
  auto it = irreducibles.find(lambda.coords);
  if (it == irreducibles.end())
    it = irreducibles.emplace(lambda.coords, Character::irreducible(d, lambda, orbit_cap)).first;
  return it->second;
}

DecompositionTable decompose(const RootDatum& d, const Character& c, Int orbit_cap,
                             CharacterCache* cache) {
  CharacterCache local;
  return decompose_with_memo(d, c, orbit_cap, cache ? *cache : local);
}

DecompositionTable tensor_decompose(const RootDatum& d, const Coweight& lambda,
                                    const Coweight& mu, Int orbit_cap, CharacterCache* cache) {
  if (!is_dominant(d, lambda) || !is_dominant(d, mu))
    throw DomainError("tensor factors must be dominant");
  CharacterCache local;
  CharacterCache& memo = cache ? *cache : local;
  const Character a = memo.irreducible(d, lambda, orbit_cap);
  const Character b = memo.irreducible(d, mu, orbit_cap);
  return decompose_with_memo(d, product(a, b), orbit_cap, memo);
}

Coweight dual_object(const RootDatum& d, const Coweight& lambda) {
  if (!is_dominant(d, lambda)) throw DomainError("dual object is defined on dominant labels");
  return dominant_representative(d, -lambda).first;
}

GradedDims fiber_functor_grading(const RootDatum& d, const Coweight& lambda, Int orbit_cap) {
  if (!is_dominant(d, lambda)) throw DomainError("grading is defined on dominant labels");
  return grading_of_terms(d, weight_table(d, lambda, orbit_cap).entries);
}

SatakeReport satake_report(const RootDatum& d, Int height_bound, Int object_cap, Int orbit_cap) {
  if (height_bound < 0) throw DomainError("height bound must be nonnegative");
  SatakeReport report;
  report.height_bound = height_bound;

  const auto lambdas = dominant_coweights_up_to_height(d, height_bound, object_cap);
  CharacterCache memo;

  struct Tally {
    Int checked = 0;
    std::string first_failure;
    void fail(const std::string& what) {
      if (first_failure.empty()) first_failure = what;
    }
    bool ok() const { return first_failure.empty(); }
  };
  Tally palindromic, parity, top_degree, sum_rule, multiplicativity, leading, support, rigidity;

  for (const auto& lambda : lambdas) {
    const Character& chi = memo.irreducible(d, lambda, orbit_cap);
    SatakeReport::ObjectRow row;
    row.lambda = lambda;
    row.dim = weyl_dimension(d, lambda);
    row.grading = grading_of_terms(d, chi.terms());
    row.dual = dual_object(d, lambda);
    const std::string tag = "lambda=" + format_coords(lambda.coords);
    const Int lambda_height = doubled_height(d, lambda);

    ++palindromic.checked;
    for (const auto& [deg, dim] : row.grading.entries)
      if (row.grading.dim_at(-deg) != dim) palindromic.fail(tag);
    ++parity.checked;
    for (const auto& [deg, dim] : row.grading.entries)
      if ((deg - lambda_height) % 2 != 0) parity.fail(tag);
    ++top_degree.checked;
    if (row.grading.entries.empty() || row.grading.entries.rbegin()->first != lambda_height ||
        row.grading.entries.rbegin()->second != 1)
      top_degree.fail(tag);
    ++sum_rule.checked;
    if (row.grading.total() != row.dim || chi.dimension() != row.dim) sum_rule.fail(tag);

    report.objects.push_back(std::move(row));
  }

  for (size_t i = 0; i < lambdas.size(); ++i) {
    for (size_t j = i; j < lambdas.size(); ++j) {
      const Coweight& lambda = lambdas[i];
      const Coweight& mu = lambdas[j];
      const Character& a = memo.irreducible(d, lambda, orbit_cap);
      const Character& b = memo.irreducible(d, mu, orbit_cap);
      const auto table = decompose_with_memo(d, product(a, b), orbit_cap, memo);
      const std::string tag =
          "lambda=" + format_coords(lambda.coords) + " mu=" + format_coords(mu.coords);
      const Coweight sum = lambda + mu;

      ++multiplicativity.checked;
      Int dim_sum = 0;
      for (const auto& [nu, mult] : table.entries) dim_sum += mult * weyl_dimension(d, Coweight(nu));
      if (dim_sum != weyl_dimension(d, lambda) * weyl_dimension(d, mu)) multiplicativity.fail(tag);

      ++leading.checked;
      if (table.multiplicity_of(sum) != 1) leading.fail(tag);

      ++support.checked;
      for (const auto& [nu, mult] : table.entries)
        if (!closure_contains(d, sum, Coweight(nu))) support.fail(tag);

      ++rigidity.checked;
      const Int identity_mult = table.multiplicity_of(Coweight(Vec(d.lattice_rank, 0)));
      const Int expected = (mu == dual_object(d, lambda)) ? 1 : 0;
      if (identity_mult != expected) rigidity.fail(tag);

      SatakeReport::TensorRow row;
      row.lambda = lambda;
      row.mu = mu;
      row.decomposition = table.entries;
      report.tensor.push_back(std::move(row));
    }
  }

  auto push_check = [&](const std::string& name, const Tally& tally, const char* unit) {
    SatakeReport::CheckRow row;
    row.name = name;
    row.pass = tally.ok();
    row.detail = tally.ok()
                     ? "checked " + std::to_string(tally.checked) + " " + unit
                     : "failed at " + tally.first_failure;
    report.all_pass = report.all_pass && row.pass;
    report.checks.push_back(std::move(row));
  };
  push_check("grading_palindromic", palindromic, "objects");
  push_check("grading_parity", parity, "objects");
  push_check("grading_top_degree", top_degree, "objects");
  push_check("dimension_sum_rule", sum_rule, "objects");
  push_check("tensor_dim_multiplicativity", multiplicativity, "pairs");
  push_check("tensor_leading_term", leading, "pairs");
  push_check("tensor_support_in_closure", support, "pairs");
  push_check("rigidity_identity_multiplicity", rigidity, "pairs");
  return report;
}

nlohmann::json report_to_json(const SatakeReport& report) {
  nlohmann::json j;
  j["height_bound"] = report.height_bound;
  j["objects"] = nlohmann::json::array();
  for (const auto& row : report.objects) {
    nlohmann::json o;
    o["lambda"] = row.lambda.coords;
    o["dim"] = row.dim;
    nlohmann::json grading = nlohmann::json::object();
    for (const auto& [deg, dim] : row.grading.entries) grading[std::to_string(deg)] = dim;
    o["grading"] = std::move(grading);
    o["dual"] = row.dual.coords;
    j["objects"].push_back(std::move(o));
  }
  j["tensor"] = nlohmann::json::array();
  for (const auto& row : report.tensor) {
    nlohmann::json t;
    t["lambda"] = row.lambda.coords;
    t["mu"] = row.mu.coords;
    nlohmann::json decomposition = nlohmann::json::object();
    for (const auto& [nu, mult] : row.decomposition) decomposition[format_coords(nu)] = mult;
    t["decomposition"] = std::move(decomposition);
    j["tensor"].push_back(std::move(t));
  }
  j["checks"] = nlohmann::json::array();
  for (const auto& row : report.checks) {
    j["checks"].push_back({{"name", row.name}, {"pass", row.pass}, {"detail", row.detail}});
  }
  j["all_pass"] = report.all_pass;
  return j;
}

std::string report_to_text(const SatakeReport& report) {
  std::ostringstream os;
  os << "objects up to doubled height " << report.height_bound << ":\n";
  size_t width = 8;
  for (const auto& row : report.objects)
    width = std::max(width, format_coords(row.lambda.coords).size() + 2);
  os << "  " << std::string(width, ' ') << "dim     dual\n";
  for (const auto& row : report.objects) {
    std::string l = format_coords(row.lambda.coords);
    l.resize(width, ' ');
    std::string dim = std::to_string(row.dim);
    dim.resize(std::max<size_t>(8, dim.size()), ' ');
    os << "  " << l << dim << format_coords(row.dual.coords) << "    grading ";
    bool first = true;
    for (const auto& [deg, mult] : row.grading.entries) {
      if (!first) os << " ";
      os << deg << ":" << mult;
      first = false;
    }
    os << "\n";
  }
  os << "tensor products:\n";
  for (const auto& row : report.tensor) {
    os << "  (" << format_coords(row.lambda.coords) << ") * (" << format_coords(row.mu.coords)
       << ") =";
    bool first = true;
    for (const auto& [nu, mult] : row.decomposition) {
      os << (first ? " " : " + ") << mult << "x(" << format_coords(nu) << ")";
      first = false;
    }
    os << "\n";
  }
  os << "checks:\n";
  for (const auto& row : report.checks)
    os << "  [" << (row.pass ? "ok" : "FAIL") << "] " << row.name << ": " << row.detail << "\n";
  return os.str();
}

}  // namespace satake
