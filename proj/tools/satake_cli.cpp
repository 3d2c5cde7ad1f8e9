// Command-line surface of the satake engine. Subcommands mirror the library:
//   dual, mult, table, dims, tensor, report, check.
// Exit codes: 0 success, 2 invalid input, 3 resource cap exceeded,
// 4 invariant failure (engine-bug signal).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "satake/cache_io.hpp"
#include "satake/checks.hpp"
#include "satake/fusion.hpp"
#include "satake/grassmannian.hpp"
#include "satake/multiplicity.hpp"
#include "satake/root_datum.hpp"
#include "satake/weyl.hpp"

namespace {

using namespace satake;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitInvariant = 4;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string type;
  std::string isogeny = "sc";
  std::string file;
  std::string format = "json";
  std::string cache_path;
  bool no_cache = false;
  Int height_bound = 8;
  Int weyl_cap = kDefaultWeylCap;
};

RootDatum resolve_datum(const Config& cfg) {
  if (!cfg.file.empty() && !cfg.type.empty())
    throw InputError("give either --type or --file, not both");
  if (!cfg.file.empty()) {
    nlohmann::json j;
    if (cfg.file == "-") {
      std::cin >> j;
    } else {
      std::ifstream in(cfg.file);
      if (!in) throw InputError("cannot open datum file '" + cfg.file + "'");
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw InputError("cannot parse datum file: " + std::string(e.what()));
      }
    }
    return datum_from_json(j);
  }
  if (cfg.type.empty()) throw InputError("no datum source: give --type or --file");
  Isogeny iso;
  if (cfg.isogeny == "sc" || cfg.isogeny == "simply-connected")
    iso = Isogeny::SimplyConnected;
  else if (cfg.isogeny == "ad" || cfg.isogeny == "adjoint")
    iso = Isogeny::Adjoint;
  else
    throw InputError("unknown isogeny '" + cfg.isogeny + "' (want sc or adjoint)");
  return build_from_cartan_type(cfg.type, iso);
}

// Comma-separated integers in the cocharacter basis, or fw:i (1-based) for
// the i-th fundamental coweight when it is integral.
Coweight parse_coweight(const RootDatum& d, const std::string& text) {
  if (text.rfind("fw:", 0) == 0) {
    int index = 0;
    try {
      index = std::stoi(text.substr(3));
    } catch (...) {
      throw InputError("cannot parse fundamental coweight index in '" + text + "'");
    }
    if (index < 1 || index > d.semisimple_rank)
      throw InputError("fundamental coweight index out of range in '" + text + "'");
    auto fw = fundamental_coweight(d, index - 1);
    if (!fw)
      throw InputError("fundamental coweight " + std::to_string(index) +
                       " is not integral on this datum");
    return *fw;
  }
  Vec coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      coords.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (...) {
      throw InputError("cannot parse coweight '" + text + "'");
    }
  }
  if (static_cast<int>(coords.size()) != d.lattice_rank)
    throw InputError("coweight '" + text + "' has " + std::to_string(coords.size()) +
                     " coordinates, datum has lattice rank " + std::to_string(d.lattice_rank));
  return Coweight(std::move(coords));
}

class CacheSession {
 public:
  CacheSession(const Config& cfg) : cfg_(cfg) {
    if (!cfg_.cache_path.empty() && !cfg_.no_cache) {
      bool corrupt = false;
      cache_ = load_partition_cache(cfg_.cache_path, &corrupt);
      if (corrupt)
        std::cerr << "note: ignoring corrupt or incompatible cache file '" << cfg_.cache_path
                  << "'\n";
      active_ = true;
    }
  }
  ~CacheSession() {
    if (active_) {
      try {
        save_partition_cache(cache_, cfg_.cache_path);
      } catch (...) {
        // Failing to persist a cache never fails the command.
      }
    }
  }
  PartitionCache* get() { return &cache_; }

 private:
  const Config& cfg_;
  PartitionCache cache_;
  bool active_ = false;
};

void emit(const Config& cfg, const nlohmann::json& as_json, const std::string& as_text,
          const std::string& as_tsv) {
  if (cfg.format == "json")
    std::cout << as_json.dump(2) << "\n";
  else if (cfg.format == "text")
    std::cout << as_text;
  else if (cfg.format == "tsv")
    std::cout << as_tsv;
  else
    throw InputError("unknown format '" + cfg.format + "' (want json, tsv or text)");
}

int cmd_dual(const Config& cfg) {
  const RootDatum d = resolve_datum(cfg);
  validate_or_throw(d);
  std::cout << datum_to_json(langlands_dual(d)).dump(2) << "\n";
  return kExitOk;
}

int cmd_mult(const Config& cfg, const std::string& lambda_text, const std::string& nu_text) {
  const RootDatum d = resolve_datum(cfg);
  validate_or_throw(d);
  const Coweight lambda = parse_coweight(d, lambda_text);
  const Coweight nu = parse_coweight(d, nu_text);
  CacheSession cache(cfg);
  const Int m = weight_multiplicity(d, lambda, nu, cache.get(), cfg.weyl_cap);
  nlohmann::json j{{"lambda", lambda.coords}, {"nu", nu.coords}, {"multiplicity", m}};
  emit(cfg, j, "multiplicity " + std::to_string(m) + "\n",
       format_coords(lambda.coords) + "\t" + format_coords(nu.coords) + "\t" +
           std::to_string(m) + "\n");
  return kExitOk;
}

int cmd_table(const Config& cfg, const std::string& lambda_text) {
  const RootDatum d = resolve_datum(cfg);
  validate_or_throw(d);
  const Coweight lambda = parse_coweight(d, lambda_text);
  const DecompositionTable table = weight_table(d, lambda, cfg.weyl_cap);
  const Int dim = weyl_dimension(d, lambda);
  const Int sum = table.total();

  nlohmann::json entries = nlohmann::json::object();
  std::string text, tsv = "#weight\tmultiplicity\n";
  for (const auto& [nu, m] : table.entries) {
    entries[format_coords(nu)] = m;
    text += format_coords(nu) + "  " + std::to_string(m) + "\n";
    tsv += format_coords(nu) + "\t" + std::to_string(m) + "\n";
  }
  const std::string footer =
      "sum " + std::to_string(sum) + "\ndimension " + std::to_string(dim) + "\n";
  nlohmann::json j{{"lambda", lambda.coords}, {"entries", entries}, {"sum", sum},
                   {"dimension", dim}};
  emit(cfg, j, text + footer, tsv + "#sum\t" + std::to_string(sum) + "\n#dimension\t" +
                                  std::to_string(dim) + "\n");
  if (sum != dim) {
    std::cerr << "invariant failure: weight table sums to " << sum << ", dimension is " << dim
              << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}

int cmd_dims(const Config& cfg, const std::string& lambda_text, const std::string& nu_text) {
  const RootDatum d = resolve_datum(cfg);
  validate_or_throw(d);
  const Coweight lambda = parse_coweight(d, lambda_text);
  const Coweight nu = parse_coweight(d, nu_text);
  CacheSession cache(cfg);

  const Int orbit = orbit_dim(d, lambda);
  const auto s_dim = s_intersection_dim(d, nu, lambda, cache.get(), cfg.weyl_cap);
  const auto t_dim = t_intersection_dim(d, nu, lambda, cache.get(), cfg.weyl_cap);
  const Int count = mv_cycle_count(d, nu, lambda, cache.get(), cfg.weyl_cap);

  auto opt_json = [](const std::optional<Int>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  auto opt_str = [](const std::optional<Int>& v) {
    return v ? std::to_string(*v) : std::string("empty");
  };
  nlohmann::json j{{"lambda", lambda.coords}, {"nu", nu.coords},     {"orbit_dim", orbit},
                   {"s_dim", opt_json(s_dim)}, {"t_dim", opt_json(t_dim)},
                   {"mv_count", count}};
  const std::string text = "orbit_dim " + std::to_string(orbit) + "\ns_dim " + opt_str(s_dim) +
                           "\nt_dim " + opt_str(t_dim) + "\nmv_count " + std::to_string(count) +
                           "\n";
  const std::string tsv = std::to_string(orbit) + "\t" + opt_str(s_dim) + "\t" + opt_str(t_dim) +
                          "\t" + std::to_string(count) + "\n";
  emit(cfg, j, text, "#orbit_dim\ts_dim\tt_dim\tmv_count\n" + tsv);
  return kExitOk;
}

int cmd_tensor(const Config& cfg, const std::string& lambda_text, const std::string& mu_text) {
  const RootDatum d = resolve_datum(cfg);
  validate_or_throw(d);
  const Coweight lambda = parse_coweight(d, lambda_text);
  const Coweight mu = parse_coweight(d, mu_text);
  const DecompositionTable table = tensor_decompose(d, lambda, mu, cfg.weyl_cap);

  Int dim_sum = 0;
  nlohmann::json entries = nlohmann::json::object();
  std::string text, tsv = "#constituent\tmultiplicity\n";
  for (const auto& [nu, m] : table.entries) {
    dim_sum += m * weyl_dimension(d, Coweight(nu));
    entries[format_coords(nu)] = m;
    text += format_coords(nu) + "  " + std::to_string(m) + "\n";
    tsv += format_coords(nu) + "\t" + std::to_string(m) + "\n";
  }
  const Int dim_product = weyl_dimension(d, lambda) * weyl_dimension(d, mu);
  nlohmann::json j{{"lambda", lambda.coords},
                   {"mu", mu.coords},
                   {"decomposition", entries},
                   {"dim_sum", dim_sum},
                   {"dim_product", dim_product}};
  emit(cfg, j, text + "dim_sum " + std::to_string(dim_sum) + "\ndim_product " +
                   std::to_string(dim_product) + "\n",
       tsv + "#dim_sum\t" + std::to_string(dim_sum) + "\n#dim_product\t" +
           std::to_string(dim_product) + "\n");
  if (dim_sum != dim_product) {
    std::cerr << "invariant failure: constituent dimensions sum to " << dim_sum
              << ", expected " << dim_product << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}

int cmd_report(const Config& cfg) {
  const RootDatum d = resolve_datum(cfg);
  validate_or_throw(d);
  const SatakeReport report = satake_report(d, cfg.height_bound, 4096, cfg.weyl_cap);

  std::string tsv = "#section\tfields\n";
  for (const auto& row : report.objects) {
    std::string grading;
    for (const auto& [deg, m] : row.grading.entries) {
      if (!grading.empty()) grading += ";";
      grading += std::to_string(deg) + ":" + std::to_string(m);
    }
    tsv += "object\t" + format_coords(row.lambda.coords) + "\t" + std::to_string(row.dim) + "\t" +
           format_coords(row.dual.coords) + "\t" + grading + "\n";
  }
  for (const auto& row : report.tensor) {
    for (const auto& [nu, m] : row.decomposition)
      tsv += "tensor\t" + format_coords(row.lambda.coords) + "\t" + format_coords(row.mu.coords) +
             "\t" + format_coords(nu) + "\t" + std::to_string(m) + "\n";
  }
  for (const auto& row : report.checks)
    tsv +=
        "check\t" + row.name + "\t" + (row.pass ? "pass" : "fail") + "\t" + row.detail + "\n";

  emit(cfg, report_to_json(report), report_to_text(report), tsv);
  if (!report.all_pass) {
    for (const auto& row : report.checks)
      if (!row.pass) std::cerr << "check failed: " << row.name << ": " << row.detail << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}

int cmd_check(const Config& cfg) {
  const RootDatum d = resolve_datum(cfg);
  validate_or_throw(d);
  CacheSession cache(cfg);
  const auto results = run_invariant_suite(d, cfg.height_bound, cfg.weyl_cap, cache.get());

  nlohmann::json rows = nlohmann::json::array();
  std::string text, tsv = "#check\tpass\tcases\tdetail\n";
  for (const auto& r : results) {
    rows.push_back(
        {{"name", r.name}, {"pass", r.pass}, {"cases", r.cases}, {"detail", r.detail}});
    text += std::string("[") + (r.pass ? "ok" : "FAIL") + "] " + r.name + ": " + r.detail + "\n";
    tsv += r.name + "\t" + (r.pass ? "pass" : "fail") + "\t" + std::to_string(r.cases) + "\t" +
           r.detail + "\n";
  }
  const bool ok = all_pass(results);
  nlohmann::json j{{"height_bound", cfg.height_bound}, {"checks", rows}, {"all_pass", ok}};
  emit(cfg, j, text, tsv);
  if (!ok) {
    for (const auto& r : results)
      if (!r.pass) std::cerr << "check failed: " << r.name << ": " << r.detail << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of loop-Grassmannian orbits, weight multiplicities and "
               "fusion products of a reductive root datum"};
  app.fallthrough();
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--type", cfg.type, "Cartan type, e.g. A2, B3, G2");
  app.add_option("--isogeny", cfg.isogeny, "sc (simply-connected) or adjoint [default sc]");
  app.add_option("--file", cfg.file, "root datum JSON file ('-' reads stdin)");
  app.add_option("--format", cfg.format, "output format: json, tsv or text [default json]");
  app.add_option("--cache", cfg.cache_path, "partition cache file (JSON, versioned)");
  app.add_flag("--no-cache", cfg.no_cache, "ignore the cache file entirely");
  app.add_option("--height-bound", cfg.height_bound,
                 "doubled-height bound for report/check sweeps [default 8]");
  app.add_option("--weyl-cap", cfg.weyl_cap,
                 "refuse Weyl-group/orbit enumerations beyond this size [default 10^6]");

  std::string lambda_text, nu_text, mu_text;
  CLI::App* dual = app.add_subcommand("dual", "print the Langlands dual datum as JSON");
  CLI::App* mult = app.add_subcommand("mult", "weight multiplicity / MV-cycle count at nu");
  mult->add_option("--lambda", lambda_text, "dominant highest coweight")->required();
  mult->add_option("--nu", nu_text, "weight to evaluate")->required();
  CLI::App* table = app.add_subcommand("table", "full weight table with sum-rule footer");
  table->add_option("--lambda", lambda_text, "dominant highest coweight")->required();
  CLI::App* dims = app.add_subcommand("dims", "orbit and intersection dimension report");
  dims->add_option("--lambda", lambda_text, "dominant orbit label")->required();
  dims->add_option("--nu", nu_text, "semi-infinite cell label")->required();
  CLI::App* tensor = app.add_subcommand("tensor", "decompose the fusion product of two objects");
  tensor->add_option("--lambda", lambda_text, "first dominant factor")->required();
  tensor->add_option("--mu", mu_text, "second dominant factor")->required();
  CLI::App* report = app.add_subcommand("report", "full exhibit up to the height bound");
  CLI::App* check = app.add_subcommand("check", "run the invariant suite up to the height bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (cfg.height_bound < 0 || cfg.weyl_cap < 1)
      throw InputError("bounds must be nonnegative");
    if (dual->parsed()) return cmd_dual(cfg);
    if (mult->parsed()) return cmd_mult(cfg, lambda_text, nu_text);
    if (table->parsed()) return cmd_table(cfg, lambda_text);
    if (dims->parsed()) return cmd_dims(cfg, lambda_text, nu_text);
    if (tensor->parsed()) return cmd_tensor(cfg, lambda_text, mu_text);
    if (report->parsed()) return cmd_report(cfg);
    if (check->parsed()) return cmd_check(cfg);
    std::cerr << "no subcommand given\n";
    return kExitInput;
  } catch (const ValidationError& e) {
    std::cerr << "invalid root datum:\n";
    for (const auto& issue : e.issues)
      std::cerr << "  [" << validation_code_name(issue.code) << "] " << issue.message << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidCartanType& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DatumMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const DecompositionError& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
