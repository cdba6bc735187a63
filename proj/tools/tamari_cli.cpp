// Command-line front end: lattice construction, interval tables, series
// dumps, verification reports, and the parking-function bijection.
//
// Exit codes: 0 ok, 2 resource cap exceeded, 3 verification mismatch,
// 4 invalid input.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "tamari/cache.hpp"
#include "tamari/checks.hpp"
#include "tamari/counting.hpp"
#include "tamari/errors.hpp"
#include "tamari/io.hpp"

namespace {

using namespace tamari;

constexpr int kExitOk = 0;
constexpr int kExitCap = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitInvalid = 4;
constexpr int kExitInternal = 70;

struct Options {
  int m = 1;
  int n = 4;
  int order = 6;
  bool with_q = false;
  bool z_side = false;
  bool all_checks = false;
  std::string check;
  std::string format;
  std::string cache_dir;
  std::uint64_t cap = kDefaultCap;
  std::string parking;
  std::string word;
  std::string labels;
  std::string form = "ballot";
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty()) throw InvalidInput("empty entry in list: " + text);
    out.push_back(std::stoi(item));
  }
  return out;
}

int cmd_lattice(const Options& opt) {
  TamariPoset poset = TamariPoset::build(opt.m, opt.n, opt.cap);
  std::string format = opt.format.empty() ? "dot" : opt.format;
  if (format == "dot") {
    std::string dot = hasse_to_dot(poset);
    DotGraph parsed;
    if (!parse_dot(dot, &parsed) ||
        static_cast<int>(parsed.labels.size()) != poset.size())
      throw AlgebraError("DOT output failed its round-trip parse");
    std::cout << dot;
  } else if (format == "json") {
    Json j;
    j["m"] = poset.m();
    j["n"] = poset.n();
    Json verts = Json::array();
    for (int i = 0; i < poset.size(); ++i)
      verts.push_back(poset.vertex(i).to_string());
    j["vertices"] = verts;
    Json edges = Json::array();
    for (int i = 0; i < poset.size(); ++i)
      for (int k : poset.hasse()[static_cast<std::size_t>(i)])
        edges.push_back(Json::array({i, k}));
    j["edges"] = edges;
    std::cout << j.dump(2) << "\n";
  } else if (format == "text") {
    std::cout << "T_" << opt.n << "^(" << opt.m << "): " << poset.size()
              << " vertices\n";
    for (int i = 0; i < poset.size(); ++i)
      std::cout << "  " << poset.vertex(i).to_string() << "\n";
  } else {
    throw InvalidInput("lattice: unsupported format " + format);
  }
  return kExitOk;
}

int cmd_intervals(const Options& opt) {
  struct Row {
    int n;
    Int unlabelled, labelled;
    Poly poly;
  };
  std::vector<Row> rows;
  for (int n = 0; n <= opt.n; ++n) {
    Int expected = ballot_number(opt.m, n);
    if (expected > Int(static_cast<unsigned long>(opt.cap)))
      throw CapExceeded("intervals: vertex count exceeds cap at n=" +
                        std::to_string(n));
    TamariPoset poset = TamariPoset::build(opt.m, n, opt.cap);
    auto intervals = enumerate_intervals(poset);
    Int labelled(0);
    for (const Interval& iv : intervals)
      labelled += labellings_count(poset.vertex(iv.upper));
    // The closed forms are always recomputed and compared.
    if (Int(intervals.size()) != closed_unlabelled(opt.m, n))
      throw VerificationMismatch("interval count differs from closed form at n=" +
                                 std::to_string(n));
    if (labelled != closed_labelled(opt.m, n))
      throw VerificationMismatch(
          "labelled count differs from closed form at n=" + std::to_string(n));
    rows.push_back(Row{n, Int(intervals.size()), labelled,
                       refined_polynomial(opt.m, n, opt.with_q, &poset).poly});
  }
  std::string format = opt.format.empty() ? "text" : opt.format;
  if (format == "json") {
    Json out = Json::array();
    for (const Row& r : rows) {
      Json j;
      j["n"] = r.n;
      j["unlabelled"] = r.unlabelled.get_str();
      j["labelled"] = r.labelled.get_str();
      j["poly"] = poly_to_json(r.poly);
      out.push_back(j);
    }
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "n,unlabelled,labelled,poly\n";
    for (const Row& r : rows)
      std::cout << r.n << "," << r.unlabelled.get_str() << ","
                << r.labelled.get_str() << ",\"" << r.poly.to_string()
                << "\"\n";
  } else if (format == "text") {
    for (const Row& r : rows)
      std::cout << "n=" << r.n << "  unlabelled=" << r.unlabelled.get_str()
                << "  labelled=" << r.labelled.get_str() << "  poly "
                << r.poly.to_string() << "\n";
  } else {
    throw InvalidInput("intervals: unsupported format " + format);
  }
  return kExitOk;
}

std::string series_payload(const Options& opt) {
  if (opt.z_side) {
    if (opt.with_q)
      throw InvalidInput("series: --with-q is a t-side refinement only");
    return zseries_to_json(solver_pipeline(opt.m, opt.order)).dump(2) + "\n";
  }
  TSeries F = solve_functional_equation(opt.m, opt.order, opt.with_q);
  return tseries_to_json(F).dump(2) + "\n";
}

int cmd_series(const Options& opt) {
  std::string key = std::string("series_") + (opt.z_side ? "z" : "t") + "_m" +
                    std::to_string(opt.m) + "_N" + std::to_string(opt.order) +
                    (opt.with_q ? "_q" : "");
  if (!opt.cache_dir.empty()) {
    std::filesystem::path dir(opt.cache_dir);
    CacheLookup hit = cache_load(dir, key);
    if (hit.corrupt)
      std::cerr << "warning: cache entry " << key
                << " is corrupt; recomputing\n";
    if (hit.payload) {
      std::cout << *hit.payload;
      return kExitOk;
    }
    std::string payload = series_payload(opt);
    cache_store(dir, key, payload);
    std::cout << payload;
    return kExitOk;
  }
  std::cout << series_payload(opt);
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  std::vector<CheckReport> reports;
  const int m = opt.m, N = opt.order, n = opt.n;
  auto q_depth = [](int m_) { return m_ == 1 ? 3 : 2; };
  if (opt.all_checks) {
    reports.push_back(check_sublattice(2, 3));
    reports.push_back(check_sublattice(3, 2));
    reports.push_back(check_decomposition(std::min(n, 4)));
    reports.push_back(check_solver_oracle(m, n, std::min(n, q_depth(m))));
    reports.push_back(check_theorem_main(m, N));
    reports.push_back(check_theorem_m1(std::min(N, 8)));
    reports.push_back(check_trivariate(1, std::min(N, 8)));
    reports.push_back(check_trivariate(2, std::min(N, 6)));
    reports.push_back(check_lambda_lemma(m, std::min(N, 6), 3));
    reports.push_back(check_lagrange(4, 100, 20260809));
    reports.push_back(check_combi_lin(1, std::min(N, 6)));
    reports.push_back(check_combi_lin(2, std::min(N, 4)));
    reports.push_back(check_g1_identity(m, N));
    reports.push_back(check_q_specialization(m, std::min(n, 3)));
    reports.push_back(check_eq_g(m, std::min(N, 6)));
  } else if (!opt.check.empty()) {
    const std::string& c = opt.check;
    if (c == "sublattice")
      reports.push_back(check_sublattice(m, n));
    else if (c == "decomposition")
      reports.push_back(check_decomposition(n));
    else if (c == "solver-oracle")
      reports.push_back(check_solver_oracle(m, n, std::min(n, q_depth(m))));
    else if (c == "theorem-main")
      reports.push_back(check_theorem_main(m, N));
    else if (c == "theorem-m1")
      reports.push_back(check_theorem_m1(N));
    else if (c == "trivariate")
      reports.push_back(check_trivariate(m, N));
    else if (c == "lambda")
      reports.push_back(check_lambda_lemma(m, N, 3));
    else if (c == "lagrange")
      reports.push_back(check_lagrange(4, 100, 20260809));
    else if (c == "combi-lin")
      reports.push_back(check_combi_lin(m, N));
    else if (c == "g1-identity")
      reports.push_back(check_g1_identity(m, N));
    else if (c == "q-spec")
      reports.push_back(check_q_specialization(m, n));
    else if (c == "eq-g")
      reports.push_back(check_eq_g(m, N));
    else
      throw InvalidInput("unknown check: " + c);
  } else {
    throw InvalidInput("verify: pass --all or --check <name>");
  }
  Json out = Json::array();
  for (const CheckReport& r : reports) out.push_back(report_to_json(r));
  std::cout << out.dump(2) << "\n";
  for (const CheckReport& r : reports)
    if (!r.pass) {
      std::cerr << "verification failed: " << r.name << "\n";
      return kExitMismatch;
    }
  return kExitOk;
}

int cmd_bijection(const Options& opt) {
  if (!opt.parking.empty()) {
    ParkingFunction f{opt.m, parse_int_list(opt.parking)};
    Labelling l = from_parking_function(f);
    std::cout << labelling_to_json(l).dump(2) << "\n";
    return kExitOk;
  }
  if (!opt.word.empty()) {
    PathWord p = opt.form == "dyck" ? PathWord::dyck(opt.word, opt.m)
                                    : PathWord::ballot(opt.word, opt.m);
    if (opt.labels.empty())
      throw InvalidInput("bijection: --labels required with --word");
    Labelling l{p, parse_int_list(opt.labels)};
    if (!is_valid_labelling(l)) throw InvalidInput("invalid labelling");
    std::cout << parking_to_json(to_parking_function(l)).dump(2) << "\n";
    return kExitOk;
  }
  throw InvalidInput("bijection: pass --parking or --word/--labels");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"m-Tamari lattices, labelled intervals, and their series"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--m", opt.m, "slope parameter m >= 1");
    sub->add_option("--cap", opt.cap, "maximum vertex count");
    sub->add_option("--format", opt.format, "output format");
  };

  CLI::App* lattice = app.add_subcommand("lattice", "Hasse diagram of T_n^(m)");
  add_common(lattice);
  lattice->add_option("--n", opt.n, "path size");

  CLI::App* intervals =
      app.add_subcommand("intervals", "interval counts and refined polynomials");
  add_common(intervals);
  intervals->add_option("--n", opt.n, "maximum path size");
  intervals->add_flag("--with-q", opt.with_q, "refine by Tamari distance");

  CLI::App* series = app.add_subcommand("series", "functional-equation series");
  add_common(series);
  series->add_option("--order", opt.order, "truncation order");
  series->add_flag("--with-q", opt.with_q, "q-analogue divided difference");
  series->add_flag("--z", opt.z_side, "dump the z-side pipeline series");
  series->add_option("--cache-dir", opt.cache_dir, "cache directory")
      ->envname("TAMARI_CACHE_DIR");

  CLI::App* verify = app.add_subcommand("verify", "identity checks");
  add_common(verify);
  verify->add_option("--n", opt.n, "path size for lattice-level checks");
  verify->add_option("--order", opt.order, "series truncation order");
  verify->add_flag("--all", opt.all_checks, "run the whole suite");
  verify->add_option("--check", opt.check, "run one named check");

  CLI::App* bijection =
      app.add_subcommand("bijection", "labelled paths <-> parking functions");
  add_common(bijection);
  bijection->add_option("--parking", opt.parking,
                        "comma-separated parking function values");
  bijection->add_option("--word", opt.word, "path word");
  bijection->add_option("--labels", opt.labels, "comma-separated labels");
  bijection->add_option("--form", opt.form, "ballot or dyck");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (lattice->parsed()) return cmd_lattice(opt);
    if (intervals->parsed()) return cmd_intervals(opt);
    if (series->parsed()) return cmd_series(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (bijection->parsed()) return cmd_bijection(opt);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const VerificationMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInvalid;
}
