// sot: split-octonion and Cl(4,4) triality tool.
//
//   sot table
//   sot verify <moufang|malcev|clifford|associators|correspondence|triality|all>
//   sot rotate --plane MU NU --theta T [--target vector|spinor] --components C...
//   sot trilinear --phi P... --x X... --psi Q... [--representation matrix|octonion|both]
//   sot matrices <gamma|B|xi|alpha>
//
// Structured output goes to stdout, diagnostics to stderr. Exit status is 0
// on success, 1 when a verification fails, 2 on usage errors.

#include <sot/json.hpp>
#include <sot/sot.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using sot::Json;
using sot::Rational;

enum class Format { json, csv, pretty };
enum class Mode { exact, flt };

struct RunConfig {
  Format format = Format::json;
  std::uint64_t seed = sot::kDefaultSeed;
  double tolerance = 1e-12;
  std::size_t samples = 1000;
  std::optional<Mode> mode;  // unset: the command's default

  Mode mode_or(Mode fallback) const { return mode.value_or(fallback); }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* mode_name(Mode m) { return m == Mode::exact ? "exact" : "float"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string json_scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void emit_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------
// table

int cmd_table(const RunConfig& cfg) {
  const auto& sc = sot::structure_constants();
  Json out{{"command", "table"},
           {"basis", Json::array()},
           {"products", sot::product_entries(sc)},
           {"associator_families", sot::associator_families()},
           {"associators", sot::associator_entries()}};
  for (auto u : sot::kAllUnits) out["basis"].push_back(std::string(sot::name(u)));

  switch (cfg.format) {
    case Format::json:
      emit_json(out);
      break;
    case Format::csv:
      std::cout << "left,right,result_unit,sign\n";
      for (const auto& e : out["products"])
        std::cout << e["left"].get<std::string>() << ',' << e["right"].get<std::string>() << ','
                  << e["result_unit"].get<std::string>() << ',' << e["sign"].get<int>() << '\n';
      break;
    case Format::pretty: {
      std::cout << "      ";
      for (auto b : sot::kAllUnits) std::cout << std::setw(5) << sot::name(b);
      std::cout << '\n';
      for (auto a : sot::kAllUnits) {
        std::cout << std::setw(5) << sot::name(a) << ' ';
        for (auto b : sot::kAllUnits) {
          const auto p = sc(a, b);
          std::cout << std::setw(5) << ((p.sign > 0 ? "+" : "-") + std::string(sot::name(p.unit)));
        }
        std::cout << '\n';
      }
      std::cout << "\nnon-vanishing associator families:\n";
      for (const auto& f : out["associator_families"]) std::cout << "  " << f.get<std::string>() << '\n';
      break;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

const std::vector<std::string> kSuites = {"moufang", "malcev", "clifford", "associators", "correspondence", "triality"};

template <sot::Scalar T>
sot::VerificationReport run_suite(const std::string& suite, const RunConfig& cfg) {
  if (suite == "moufang") return sot::verify_moufang<T>(cfg.tolerance);
  if (suite == "malcev") return sot::verify_malcev<T>(cfg.tolerance);
  if (suite == "clifford") return sot::verify_clifford<T>(cfg.tolerance);
  if (suite == "associators") {
    auto r = sot::verify_associators<T>(cfg.seed, cfg.samples, cfg.tolerance);
    r.seed = cfg.seed;
    return r;
  }
  if (suite == "correspondence") return sot::correspondence_check<T>(cfg.samples, cfg.seed, cfg.tolerance);
  if (suite == "triality") return sot::verify_triality<T>(cfg.seed, cfg.samples, cfg.tolerance);
  throw UsageError("unknown suite '" + suite + "'");
}

int cmd_verify(const std::string& suite, const RunConfig& cfg) {
  std::vector<std::string> names;
  if (suite == "all")
    names = kSuites;
  else
    names.push_back(suite);

  const Mode mode = cfg.mode_or(Mode::exact);
  std::vector<sot::VerificationReport> reports;
  for (const auto& n : names) {
    reports.push_back(mode == Mode::exact ? run_suite<Rational>(n, cfg) : run_suite<double>(n, cfg));
    const auto& r = reports.back();
    std::cerr << "verify " << n << ": " << r.cases() << " cases, " << r.failures() << " failures\n";
  }

  bool passed = true;
  std::size_t cases = 0, failures = 0;
  for (const auto& r : reports) {
    passed = passed && r.passed();
    cases += r.cases();
    failures += r.failures();
  }

  switch (cfg.format) {
    case Format::json: {
      Json out{{"command", "verify"}, {"suite", suite},       {"mode", mode_name(mode)}, {"passed", passed},
               {"cases", cases},      {"failures", failures}, {"reports", Json::array()}};
      for (const auto& r : reports) out["reports"].push_back(sot::to_json(r));
      emit_json(out);
      break;
    }
    case Format::csv:
      std::cout << "suite,identity,cases,failures,max_residual\n";
      for (const auto& r : reports)
        for (const auto& i : r.identities)
          std::cout << r.suite << ',' << csv_field(i.name) << ',' << i.cases << ',' << i.failures << ','
                    << Json(i.max_residual).dump() << '\n';
      break;
    case Format::pretty:
      for (const auto& r : reports) {
        std::cout << r.suite << " (" << r.mode << "): " << r.cases() << " cases, " << r.failures() << " failures\n";
        for (const auto& i : r.identities) {
          std::cout << "  " << (i.failures ? "[FAIL] " : "[ok]   ") << i.name << "  " << (i.cases - i.failures) << '/'
                    << i.cases;
          if (i.first_failure) std::cout << "  first failure: " << *i.first_failure;
          std::cout << '\n';
        }
        for (const auto& n : r.notes) std::cout << "  note: " << n << '\n';
      }
      std::cout << (passed ? "all passed" : "FAILED") << '\n';
      break;
  }
  return passed ? 0 : 1;
}

// ---------------------------------------------------------------------------
// rotate

int cmd_rotate(const std::vector<std::size_t>& plane, double theta, const std::string& target,
               const std::vector<double>& components, const RunConfig& cfg) {
  if (cfg.mode_or(Mode::flt) != Mode::flt) throw UsageError("rotate takes continuous angles; use --mode float");
  if (plane.size() != 2) throw UsageError("--plane needs two indices");
  const std::size_t mu = plane[0], nu = plane[1];
  if (mu > 7 || nu > 7) throw UsageError("plane indices must lie in 0..7");
  if (mu == nu) throw UsageError("plane indices must differ");
  const std::size_t want = target == "vector" ? 8 : 16;
  if (components.size() != want)
    throw UsageError(target + " needs " + std::to_string(want) + " components, got " + std::to_string(components.size()));

  const auto r = sot::rotor(mu, nu, theta);
  std::vector<double> after;
  double before_inv = 0, after_inv = 0;
  if (target == "vector") {
    std::array<double, 8> c;
    std::copy(components.begin(), components.end(), c.begin());
    const sot::Vector8<double> x(c);
    const auto y = sot::rotate_vector(x, r);
    after.assign(y.x.begin(), y.x.end());
    before_inv = sot::quadratic_form(x);
    after_inv = sot::quadratic_form(y);
  } else {
    std::array<double, 16> c;
    std::copy(components.begin(), components.end(), c.begin());
    const auto eta = sot::Spinor16<double>::from_column(c);
    const auto out = sot::rotate_spinor(eta, r);
    const auto col = out.column();
    after.assign(col.begin(), col.end());
    before_inv = sot::spinor_invariant(eta);
    after_inv = sot::spinor_invariant(out);
  }

  for (double& v : after)
    if (v == 0.0) v = 0.0;  // no negative zeros in the output
  const std::string invariant = target == "vector" ? "Q(x)" : "eta^T B eta";
  switch (cfg.format) {
    case Format::json:
      emit_json(Json{{"command", "rotate"},
                     {"mode", "float"},
                     {"plane", {mu, nu}},
                     {"kind", r.compact() ? "compact" : "boost"},
                     {"theta", theta},
                     {"target", target},
                     {"input", components},
                     {"output", after},
                     {"invariant", invariant},
                     {"invariant_before", before_inv},
                     {"invariant_after", after_inv}});
      break;
    case Format::csv:
      std::cout << "index,input,output\n";
      for (std::size_t i = 0; i < after.size(); ++i)
        std::cout << i << ',' << Json(components[i]).dump() << ',' << Json(after[i]).dump() << '\n';
      std::cout << csv_field("invariant " + invariant) << ',' << Json(before_inv).dump() << ','
                << Json(after_inv).dump() << '\n';
      break;
    case Format::pretty:
      std::cout << "L_" << mu << nu << '(' << theta << ") " << (r.compact() ? "rotation" : "boost") << " on " << target
                << '\n';
      for (std::size_t i = 0; i < after.size(); ++i)
        std::cout << "  [" << i << "] " << components[i] << " -> " << after[i] << '\n';
      std::cout << "  " << invariant << ": " << before_inv << " -> " << after_inv << '\n';
      break;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// trilinear

template <sot::Scalar T>
std::array<T, 8> parse_components(const std::vector<std::string>& raw, const std::string& what) {
  if (raw.size() != 8) throw UsageError(what + " needs 8 components, got " + std::to_string(raw.size()));
  std::array<T, 8> out;
  for (std::size_t i = 0; i < 8; ++i) {
    try {
      if constexpr (sot::is_exact_v<T>) {
        out[i] = Rational(raw[i]);
      } else {
        std::size_t used = 0;
        out[i] = std::stod(raw[i], &used);
        if (used != raw[i].size()) throw std::invalid_argument(raw[i]);
      }
    } catch (const std::exception&) {
      throw UsageError("malformed " + what + " component '" + raw[i] + "'");
    }
  }
  return out;
}

template <sot::Scalar T>
int trilinear_impl(const std::vector<std::string>& phi_raw, const std::vector<std::string>& x_raw,
                   const std::vector<std::string>& psi_raw, const std::string& representation, const RunConfig& cfg) {
  const auto phi = sot::Spinor16<T>::left(parse_components<T>(phi_raw, "phi"));
  const sot::Vector8<T> x(parse_components<T>(x_raw, "x"));
  const auto psi = sot::Spinor16<T>::right(parse_components<T>(psi_raw, "psi"));

  Json out{{"command", "trilinear"}, {"mode", sot::ScalarTraits<T>::mode}, {"representation", representation}};
  out["matrix"] = nullptr;
  out["octonion"] = nullptr;
  out["residual"] = nullptr;
  out["dictionary"] = nullptr;

  std::optional<T> m, o;
  if (representation != "octonion") m = sot::trilinear_matrix(phi, x, psi);
  if (representation == "octonion") {
    o = sot::trilinear_oct(sot::oct_from_components(phi.phi), sot::oct_from_components(x.x),
                           sot::oct_from_components(psi.psi));
  } else if (representation == "both") {
    const sot::CorrespondenceMap* map = nullptr;
    try {
      map = &sot::pinned_dictionary();
    } catch (const sot::Error& e) {
      throw sot::Error(std::string("trilinear dictionary unavailable: ") + e.what());
    }
    o = map->evaluate(phi, x, psi);
    out["dictionary"] = sot::to_json(*map);
    out["residual"] = sot::residual(*m, *o);
  }
  if (m) out["matrix"] = sot::scalar_json(*m);
  if (o) out["octonion"] = sot::scalar_json(*o);

  switch (cfg.format) {
    case Format::json:
      emit_json(out);
      break;
    case Format::csv:
      std::cout << "representation,value\n";
      if (m) std::cout << "matrix," << json_scalar_text(out["matrix"]) << '\n';
      if (o) std::cout << "octonion," << json_scalar_text(out["octonion"]) << '\n';
      if (!out["residual"].is_null()) std::cout << "residual," << out["residual"].dump() << '\n';
      break;
    case Format::pretty:
      if (m) std::cout << "phi^T B X psi          = " << json_scalar_text(out["matrix"]) << '\n';
      if (o) std::cout << "-inner(conj(Phi), X Psi) = " << json_scalar_text(out["octonion"]) << '\n';
      if (!out["residual"].is_null()) std::cout << "residual               = " << out["residual"].dump() << '\n';
      break;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// matrices

template <sot::Scalar T>
int matrices_impl(const std::string& which, const RunConfig& cfg) {
  Json list = Json::array();
  auto add = [&](const std::string& name, const auto& m) { list.push_back({{"name", name}, {"rows", sot::to_json(m)}}); };
  std::string scale = "1";
  if (which == "gamma") {
    for (std::size_t mu = 0; mu < 8; ++mu) add("Gamma_" + std::to_string(mu), sot::gamma<T>(mu));
  } else if (which == "alpha") {
    for (std::size_t mu = 0; mu < 8; ++mu) add("alpha_" + std::to_string(mu), sot::alpha<T>(mu));
  } else if (which == "B") {
    add("B", sot::b_matrix<T>());
  } else if (which == "xi") {
    add("M", sot::xi_matrix<T>());
    scale = "1/sqrt(2)";
  } else {
    throw UsageError("unknown matrix selector '" + which + "'");
  }

  switch (cfg.format) {
    case Format::json:
      emit_json(Json{{"command", "matrices"}, {"which", which}, {"mode", sot::ScalarTraits<T>::mode}, {"scale", scale},
                     {"matrices", list}});
      break;
    case Format::csv:
      std::cout << "matrix,row,col,re,im\n";
      for (const auto& m : list)
        for (std::size_t r = 0; r < m["rows"].size(); ++r)
          for (std::size_t c = 0; c < m["rows"][r].size(); ++c) {
            const auto& e = m["rows"][r][c];
            std::cout << m["name"].get<std::string>() << ',' << r << ',' << c << ',' << json_scalar_text(e["re"]) << ','
                      << json_scalar_text(e["im"]) << '\n';
          }
      break;
    case Format::pretty:
      if (scale != "1") std::cout << "overall factor " << scale << '\n';
      for (const auto& m : list) {
        std::cout << m["name"].get<std::string>() << '\n';
        for (const auto& row : m["rows"]) {
          std::cout << ' ';
          for (const auto& e : row) {
            const std::string re = json_scalar_text(e["re"]), im = json_scalar_text(e["im"]);
            std::string cell;
            if (re != "0") cell = re;
            if (im != "0") cell += (im[0] == '-' || cell.empty() ? "" : "+") + (im == "1" ? "" : im == "-1" ? "-" : im) + "i";
            std::cout << std::setw(6) << (cell.empty() ? "." : cell);
          }
          std::cout << '\n';
        }
      }
      break;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Split octonions, Cl(4,4) and triality"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "json", mode;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--seed", cfg.seed, "Seed for random samples");
  app.add_option("--tolerance", cfg.tolerance, "Float-mode tolerance")->check(CLI::PositiveNumber);
  app.add_option("--samples", cfg.samples, "Random samples per identity")->check(CLI::PositiveNumber);
  app.add_option("--mode", mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));

  auto* table = app.add_subcommand("table", "Multiplication table and associator families");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"moufang", "malcev", "clifford", "associators", "correspondence", "triality", "all"}));

  std::vector<std::size_t> plane;
  double theta = 0;
  std::string target = "vector";
  std::vector<double> components;
  auto* rotate = app.add_subcommand("rotate", "Apply a plane rotor to a vector or spinor");
  rotate->add_option("--plane", plane, "Plane indices MU NU")->required()->expected(2);
  rotate->add_option("--theta", theta, "Angle or rapidity (radians)")->required();
  rotate->add_option("--target", target, "vector or spinor")->check(CLI::IsMember({"vector", "spinor"}));
  rotate->add_option("--components", components, "8 vector or 16 spinor components")->required();

  std::vector<std::string> phi, x, psi;
  std::string representation = "both";
  auto* trilinear = app.add_subcommand("trilinear", "Evaluate the trilinear form");
  trilinear->add_option("--phi", phi, "8 left-spinor components")->required();
  trilinear->add_option("--x", x, "8 vector components")->required();
  trilinear->add_option("--psi", psi, "8 right-spinor components")->required();
  trilinear->add_option("--representation", representation, "matrix, octonion or both")
      ->check(CLI::IsMember({"matrix", "octonion", "both"}));

  std::string which;
  auto* matrices = app.add_subcommand("matrices", "Emit Gamma, alpha, B or the xi basis change");
  matrices->add_option("which", which, "gamma, B, xi or alpha")->required()->check(CLI::IsMember({"gamma", "B", "xi", "alpha"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.format = format == "csv" ? Format::csv : format == "pretty" ? Format::pretty : Format::json;
  if (!mode.empty()) cfg.mode = mode == "exact" ? Mode::exact : Mode::flt;

  try {
    if (*table) return cmd_table(cfg);
    if (*verify) return cmd_verify(suite, cfg);
    if (*rotate) return cmd_rotate(plane, theta, target, components, cfg);
    if (*trilinear)
      return cfg.mode_or(Mode::flt) == Mode::exact ? trilinear_impl<Rational>(phi, x, psi, representation, cfg)
                                                   : trilinear_impl<double>(phi, x, psi, representation, cfg);
    if (*matrices)
      return cfg.mode_or(Mode::exact) == Mode::exact ? matrices_impl<Rational>(which, cfg)
                                                     : matrices_impl<double>(which, cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
