#include "satake/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

#include "satake/rational.hpp"

namespace satake {

Int dot(const Weight& w, const Coweight& v) {
  if (w.coords.size() != v.coords.size())
    throw DomainError("pairing of vectors of different lattice rank");
  Int s = 0;
  for (size_t i = 0; i < w.coords.size(); ++i) s += w.coords[i] * v.coords[i];
  return s;
}

std::string format_coords(const Vec& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

CartanType parse_cartan_type(const std::string& label) {
  if (label.size() < 2) throw InvalidCartanType("cannot parse Cartan type '" + label + "'");
  const char series = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  if (series < 'A' || series > 'G')
    throw InvalidCartanType("unknown Cartan series '" + label + "'");
  int rank = 0;
  for (size_t i = 1; i < label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(label[i])))
      throw InvalidCartanType("cannot parse Cartan rank in '" + label + "'");
    rank = rank * 10 + (label[i] - '0');
    if (rank > 1000) throw InvalidCartanType("rank out of range in '" + label + "'");
  }
  return CartanType{series, rank};
}

namespace {

// Entries follow <alpha_i, alphacheck_j>; the transpose of the convention
// that symmetrizes by root lengths.
std::vector<Vec> cartan_table(CartanType t) {
  const int r = t.rank;
  auto chain = [&](int n) {
    std::vector<Vec> m(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 2;
    for (int i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = -1;
    return m;
  };
  switch (t.series) {
    case 'A': {
      if (r < 1) throw InvalidCartanType("type A needs rank >= 1");
      return chain(r);
    }
    case 'B': {
      if (r < 2) throw InvalidCartanType("type B needs rank >= 2");
      auto m = chain(r);
      m[r - 2][r - 1] = -2;
      return m;
    }
    case 'C': {
      if (r < 2) throw InvalidCartanType("type C needs rank >= 2");
      auto m = chain(r);
      m[r - 1][r - 2] = -2;
      return m;
    }
    case 'D': {
      if (r < 3) throw InvalidCartanType("type D needs rank >= 3");
      auto m = chain(r - 1);
      for (auto& row : m) row.resize(r, 0);
      m.push_back(Vec(r, 0));
      m[r - 1][r - 1] = 2;
      m[r - 1][r - 2] = m[r - 2][r - 1] = 0;
      m[r - 1][r - 3] = m[r - 3][r - 1] = -1;
      return m;
    }
    case 'E': {
      if (r < 6 || r > 8) throw InvalidCartanType("type E needs rank 6, 7 or 8");
      std::vector<Vec> m(r, Vec(r, 0));
      for (int i = 0; i < r; ++i) m[i][i] = 2;
      auto link = [&](int a, int b) { m[a][b] = m[b][a] = -1; };
      link(0, 2);
      for (int i = 2; i + 1 < r; ++i) link(i, i + 1);
      link(1, 3);
      return m;
    }
    case 'F': {
      if (r != 4) throw InvalidCartanType("type F needs rank 4");
      auto m = chain(4);
      m[1][2] = -2;
      return m;
    }
    case 'G': {
      if (r != 2) throw InvalidCartanType("type G needs rank 2");
      std::vector<Vec> m{{2, -1}, {-3, 2}};
      return m;
    }
    default:
      throw InvalidCartanType("unknown Cartan series");
  }
}

std::string isogeny_tag(Isogeny iso) {
  return iso == Isogeny::SimplyConnected ? "sc" : "ad";
}

}  // namespace

RootDatum build_from_cartan_type(CartanType type, Isogeny isogeny) {
  const auto cartan = cartan_table(type);
  const int r = type.rank;
  RootDatum d;
  d.name = std::string(1, type.series) + std::to_string(r) + "-" + isogeny_tag(isogeny);
  d.lattice_rank = r;
  d.semisimple_rank = r;
  d.simple_roots.assign(r, Vec(r, 0));
  d.simple_coroots.assign(r, Vec(r, 0));
  if (isogeny == Isogeny::SimplyConnected) {
    // Coroots are the standard basis; root i is then pinned by its pairings.
    for (int i = 0; i < r; ++i) {
      d.simple_coroots[i][i] = 1;
      d.simple_roots[i] = cartan[i];
    }
  } else {
    for (int i = 0; i < r; ++i) {
      d.simple_roots[i][i] = 1;
      for (int j = 0; j < r; ++j) d.simple_coroots[i][j] = cartan[j][i];
    }
  }
  return d;
}

RootDatum build_from_cartan_type(const std::string& label, Isogeny isogeny) {
  return build_from_cartan_type(parse_cartan_type(label), isogeny);
}

std::vector<Vec> cartan_matrix(const RootDatum& d) {
  const int r = d.semisimple_rank;
  std::vector<Vec> m(r, Vec(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      m[i][j] = dot(Weight(d.simple_roots[i]), Coweight(d.simple_coroots[j]));
  return m;
}

std::string validation_code_name(ValidationCode code) {
  switch (code) {
    case ValidationCode::BadShape: return "BadShape";
    case ValidationCode::DiagonalNotTwo: return "DiagonalNotTwo";
    case ValidationCode::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case ValidationCode::AsymmetricZeroPattern: return "AsymmetricZeroPattern";
    case ValidationCode::NotFiniteType: return "NotFiniteType";
    case ValidationCode::RootsDependent: return "RootsDependent";
    case ValidationCode::CorootsDependent: return "CorootsDependent";
  }
  return "Unknown";
}

std::vector<ValidationIssue> validate(const RootDatum& d) {
  std::vector<ValidationIssue> issues;
  auto report = [&](ValidationCode code, int i, int j, std::string msg) {
    issues.push_back(ValidationIssue{code, i, j, std::move(msg)});
  };

  const int n = d.lattice_rank;
  const int r = d.semisimple_rank;
  if (n < 0 || r < 0 || r > n) {
    report(ValidationCode::BadShape, -1, -1,
           "need 0 <= semisimple rank <= lattice rank, got r=" + std::to_string(r) +
               ", n=" + std::to_string(n));
    return issues;
  }
  if (static_cast<int>(d.simple_roots.size()) != r ||
      static_cast<int>(d.simple_coroots.size()) != r) {
    report(ValidationCode::BadShape, -1, -1, "number of simple roots/coroots differs from r");
    return issues;
  }
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(d.simple_roots[i].size()) != n ||
        static_cast<int>(d.simple_coroots[i].size()) != n) {
      report(ValidationCode::BadShape, i, -1, "coordinate vector of wrong length");
      return issues;
    }
  }

  const auto cartan = cartan_matrix(d);
  for (int i = 0; i < r; ++i) {
    if (cartan[i][i] != 2)
      report(ValidationCode::DiagonalNotTwo, i, i,
             "cartan(" + std::to_string(i) + "," + std::to_string(i) + ") = " +
                 std::to_string(cartan[i][i]));
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0)
        report(ValidationCode::PositiveOffDiagonal, i, j,
               "cartan(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                   std::to_string(cartan[i][j]) + " > 0");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
        report(ValidationCode::AsymmetricZeroPattern, i, j,
               "cartan(" + std::to_string(i) + "," + std::to_string(j) + ") and transpose entry " +
                   "have different zero pattern");
    }
  }

  const auto minors = leading_principal_minors(cartan);
  for (int k = 0; k < static_cast<int>(minors.size()); ++k) {
    if (minors[k] <= 0) {
      report(ValidationCode::NotFiniteType, k + 1, -1,
             "leading principal minor of order " + std::to_string(k + 1) + " is " +
                 std::to_string(minors[k]));
      break;
    }
  }

  if (rational_rank(d.simple_roots) != r)
    report(ValidationCode::RootsDependent, -1, -1, "simple roots are linearly dependent");
  if (rational_rank(d.simple_coroots) != r)
    report(ValidationCode::CorootsDependent, -1, -1, "simple coroots are linearly dependent");

  return issues;
}

ValidationError::ValidationError(std::vector<ValidationIssue> issues_in)
    : Error([&issues_in] {
        std::string msg = "invalid root datum:";
        for (const auto& issue : issues_in)
          msg += " [" + validation_code_name(issue.code) + "] " + issue.message + ";";
        return msg;
      }()),
      issues(std::move(issues_in)) {}

void validate_or_throw(const RootDatum& d) {
  auto issues = validate(d);
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

RootDatum langlands_dual(const RootDatum& d) {
  RootDatum dual;
  if (d.name) {
    std::string n = *d.name;
    if (!n.empty() && n.back() == '^')
      n.pop_back();
    else
      n += '^';
    dual.name = n;
  }
  dual.lattice_rank = d.lattice_rank;
  dual.semisimple_rank = d.semisimple_rank;
  dual.simple_roots = d.simple_coroots;
  dual.simple_coroots = d.simple_roots;
  return dual;
}

std::optional<Vec> coroot_lattice_coords(const RootDatum& d, const Coweight& v) {
  if (static_cast<int>(v.coords.size()) != d.lattice_rank)
    throw DomainError("coweight of wrong lattice rank");
  auto sol = solve_columns(d.simple_coroots, v.coords);
  if (!sol) return std::nullopt;
  Vec coords(sol->size());
  for (size_t i = 0; i < sol->size(); ++i) {
    if (!is_integer((*sol)[i])) return std::nullopt;
    coords[i] = (*sol)[i].numerator();
  }
  return coords;
}

bool in_coroot_lattice(const RootDatum& d, const Coweight& v) {
  validate_or_throw(d);
  return coroot_lattice_coords(d, v).has_value();
}

std::optional<Coweight> fundamental_coweight(const RootDatum& d, int i) {
  validate_or_throw(d);
  const int r = d.semisimple_rank;
  if (i < 0 || i >= r) throw DomainError("fundamental coweight index out of range");
  // Solve cartan * c = e_i; the coweight is sum_k c_k alphacheck_k, the unique
  // element of the coroot span pairing to delta_ij with the simple roots.
  const auto cartan = cartan_matrix(d);
  std::vector<Vec> cols(r, Vec(r));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) cols[a][b] = cartan[b][a];
  Vec e(r, 0);
  e[i] = 1;
  auto c = solve_columns(cols, e);
  if (!c) throw InternalError("cartan matrix not invertible on a validated datum");
  std::vector<Rat> coords(d.lattice_rank, Rat(0));
  for (int k = 0; k < r; ++k)
    for (int t = 0; t < d.lattice_rank; ++t) coords[t] += (*c)[k] * Rat(d.simple_coroots[k][t]);
  Vec out(d.lattice_rank);
  for (int t = 0; t < d.lattice_rank; ++t) {
    if (!is_integer(coords[t])) return std::nullopt;
    out[t] = coords[t].numerator();
  }
  return Coweight(out);
}

nlohmann::json datum_to_json(const RootDatum& d) {
  nlohmann::json j;
  if (d.name) j["name"] = *d.name;
  j["rank_lattice"] = d.lattice_rank;
  j["rank_semisimple"] = d.semisimple_rank;
  j["simple_roots"] = d.simple_roots;
  j["simple_coroots"] = d.simple_coroots;
  return j;
}

RootDatum datum_from_json(const nlohmann::json& j) {
  RootDatum d;
  try {
    if (j.contains("name")) d.name = j.at("name").get<std::string>();
    d.lattice_rank = j.at("rank_lattice").get<int>();
    d.semisimple_rank = j.at("rank_semisimple").get<int>();
    d.simple_roots = j.at("simple_roots").get<std::vector<Vec>>();
    d.simple_coroots = j.at("simple_coroots").get<std::vector<Vec>>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed root datum JSON: ") + e.what());
  }
  return d;
}

std::string canonical_key(const RootDatum& d) {
  std::ostringstream os;
  os << d.lattice_rank << ';' << d.semisimple_rank << ';';
  for (const auto& v : d.simple_roots) os << format_coords(v) << '|';
  os << ';';
  for (const auto& v : d.simple_coroots) os << format_coords(v) << '|';
  return os.str();
}

std::uint64_t datum_fingerprint(const RootDatum& d) {
  const std::string key = canonical_key(d);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace satake
