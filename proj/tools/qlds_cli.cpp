// Command-line front end: reproducible reports over the lattice, coherent,
// classification, and CHSH modules. Exit codes: 0 success, 1 parse or
// precondition error, 2 residual-check failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qlds/chsh.hpp"
#include "qlds/dempster.hpp"
#include "qlds/finite_qm.hpp"
#include "qlds/json_io.hpp"

namespace {

using qlds::Json;

constexpr double kPiOver8 = 0.39269908169872414;

struct GlobalOptions {
  bool csv = false;
  bool no_timestamp = false;
  std::optional<double> tol_override;
};

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

void stamp(Json& j, const GlobalOptions& opts) {
  if (!opts.no_timestamp) j["timestamp"] = utc_timestamp();
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int apply_tolerance(const GlobalOptions& opts) {
  qlds::Tolerance tol;
  if (const char* env = std::getenv("QLDS_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      std::cerr << "QLDS_TOL must be a positive number\n";
      return 1;
    }
    tol.zero_tol = v;
  }
  if (opts.tol_override) {
    if (!(*opts.tol_override > 0.0)) {
      std::cerr << "--tol must be positive\n";
      return 1;
    }
    tol.zero_tol = *opts.tol_override;
  }
  qlds::set_session_tolerance(tol);
  return 0;
}

Json chsh_point(const qlds::Su2Setting& setting, std::optional<double> theta) {
  const qlds::Tolerance& tol = qlds::session_tolerance();
  const qlds::ProbabilityTable table = qlds::probability_table(setting, tol);
  const double lhs = qlds::chsh_lhs(setting, tol);
  const qlds::BooleReport boole = qlds::boole_violation(setting, tol);
  const qlds::MeetZeroReport meet = qlds::verify_meet_zero(setting, tol);

  Json j = qlds::probability_table_to_json(table);
  if (theta) j["theta"] = *theta;
  j["a"] = {setting.a().real(), setting.a().imag()};
  j["b"] = {setting.b().real(), setting.b().imag()};
  j["chsh_lhs"] = lhs;
  j["bound"] = 3.0;
  j["violated"] = lhs > 3.0 + tol.zero_tol;
  j["boole_sum"] = boole.lhs_sum;
  j["boole_joint"] = boole.joint;
  j["boole_violated"] = boole.violated;
  j["meet_dimension"] = meet.meet_dimension;
  j["degenerate"] = meet.degenerate;
  return j;
}

int run_chsh(const GlobalOptions& opts, std::optional<double> theta,
             const std::vector<std::optional<double>>& ab,
             const std::string& sweep) {
  const qlds::Tolerance& tol = qlds::session_tolerance();

  if (!sweep.empty()) {
    double lo = 0.0, hi = 0.0;
    int steps = 0;
    char extra = 0;
    if (std::sscanf(sweep.c_str(), "%lf:%lf:%d%c", &lo, &hi, &steps, &extra) != 3 ||
        steps < 1) {
      std::cerr << "--sweep expects lo:hi:steps with steps >= 1\n";
      return 1;
    }
    Json rows = Json::array();
    std::vector<std::string> csv_lines;
    csv_lines.emplace_back(
        "theta,kappa,lambda,chsh_lhs,violated,boole_sum,boole_violated");
    double worst_residual = 0.0;
    for (int i = 0; i <= steps; ++i) {
      const double th = lo + (hi - lo) * static_cast<double>(i) / steps;
      const qlds::Su2Setting s = qlds::Su2Setting::from_theta(th);
      const qlds::ProbabilityTable table = qlds::probability_table(s, tol);
      const double lhs = qlds::chsh_lhs(s, tol);
      const qlds::BooleReport boole = qlds::boole_violation(s, tol);
      worst_residual = std::max(worst_residual, table.cross_residual);
      const bool violated = lhs > 3.0 + tol.zero_tol;
      rows.push_back({{"theta", th},
                      {"kappa", table.kappa},
                      {"lambda", table.lambda_val},
                      {"chsh_lhs", lhs},
                      {"violated", violated},
                      {"boole_sum", boole.lhs_sum},
                      {"boole_violated", boole.violated}});
      csv_lines.push_back(fmt17(th) + "," + fmt17(table.kappa) + "," +
                          fmt17(table.lambda_val) + "," + fmt17(lhs) + "," +
                          (violated ? "true" : "false") + "," +
                          fmt17(boole.lhs_sum) + "," +
                          (boole.violated ? "true" : "false"));
    }
    if (opts.csv) {
      for (const auto& line : csv_lines) std::cout << line << "\n";
    } else {
      Json j{{"command", "chsh"}, {"rows", std::move(rows)}};
      stamp(j, opts);
      print_json(j);
    }
    return worst_residual <= tol.zero_tol ? 0 : 2;
  }

  std::optional<qlds::Su2Setting> setting;
  std::optional<double> theta_used;
  const bool any_ab = std::any_of(ab.begin(), ab.end(),
                                  [](const auto& v) { return v.has_value(); });
  if (any_ab) {
    setting = qlds::Su2Setting(
        qlds::Complex(ab[0].value_or(0.0), ab[1].value_or(0.0)),
        qlds::Complex(ab[2].value_or(0.0), ab[3].value_or(0.0)), tol);
  } else {
    theta_used = theta.value_or(kPiOver8);
    setting = qlds::Su2Setting::from_theta(*theta_used);
  }

  Json j = chsh_point(*setting, theta_used);
  const double residual = j["cross_residual"].get<double>();
  if (opts.csv) {
    std::cout << "theta,kappa,lambda,chsh_lhs,violated,boole_sum,boole_violated\n"
              << (theta_used ? fmt17(*theta_used) : std::string()) << ","
              << fmt17(j["kappa"].get<double>()) << ","
              << fmt17(j["lambda"].get<double>()) << ","
              << fmt17(j["chsh_lhs"].get<double>()) << ","
              << (j["violated"].get<bool>() ? "true" : "false") << ","
              << fmt17(j["boole_sum"].get<double>()) << ","
              << (j["boole_violated"].get<bool>() ? "true" : "false") << "\n";
  } else {
    j["command"] = "chsh";
    stamp(j, opts);
    print_json(j);
  }
  return residual <= tol.zero_tol ? 0 : 2;
}

int run_lattice_demo(const GlobalOptions& opts) {
  const qlds::Tolerance& tol = qlds::session_tolerance();
  qlds::CMatrix v1(3, 1), v2(3, 1);
  v1 << 1.0, 0.0, 0.0;
  v2 << 1.0, 1.0, 0.0;
  const qlds::Subspace h1 = qlds::Subspace::from_span(v1, tol);
  const qlds::Subspace h2 = qlds::Subspace::from_span(v2, tol);
  const qlds::AdditivityOperator op = qlds::additivity_operator(h1, h2, tol);
  const qlds::AdditivityIdentities identities =
      qlds::verify_proposition1(h1, h2, tol);

  Json j{{"command", "lattice-demo"},
         {"p_h1", qlds::matrix_to_json(h1.projector())},
         {"p_h2", qlds::matrix_to_json(h2.projector())},
         {"p_join", qlds::matrix_to_json(qlds::join(h1, h2, tol).projector())},
         {"p_meet", qlds::matrix_to_json(qlds::meet(h1, h2, tol).projector())},
         {"d_operator", qlds::matrix_to_json(op.matrix)},
         {"commutator", qlds::matrix_to_json(identities.commutator)},
         {"d_eigenvalues", std::vector<double>(op.eigenvalues.begin(),
                                               op.eigenvalues.end())},
         {"residuals", qlds::identities_to_json(identities)},
         {"tolerance", tol.zero_tol},
         {"pass", identities.pass(tol.zero_tol)}};
  stamp(j, opts);
  print_json(j);
  return identities.pass(tol.zero_tol) ? 0 : 2;
}

qlds::CVector parse_fiducial(const std::string& arg, int d) {
  Json j;
  if (!arg.empty() && arg.front() == '[') {
    j = Json::parse(arg);
  } else {
    std::ifstream in(arg);
    if (!in) {
      throw std::invalid_argument("--fiducial: cannot open file " + arg);
    }
    in >> j;
    if (j.is_object() && j.contains("fiducial")) j = j["fiducial"];
  }
  if (!j.is_array() || j.size() != static_cast<std::size_t>(d)) {
    throw std::invalid_argument("--fiducial: expected an array of d [re, im] pairs");
  }
  qlds::CVector v(d);
  for (int i = 0; i < d; ++i) {
    const auto& entry = j.at(i);
    if (!entry.is_array() || entry.size() != 2) {
      throw std::invalid_argument("--fiducial: entry is not [re, im]");
    }
    v(i) = qlds::Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
  }
  return v;
}

int run_coherent(const GlobalOptions& opts, int d, std::uint64_t seed,
                 const std::string& fiducial_arg) {
  const qlds::Tolerance& tol = qlds::session_tolerance();
  const qlds::FiniteSystem system(d);

  qlds::CVector fiducial;
  Json j{{"command", "coherent"}, {"d", d}};
  if (fiducial_arg.empty()) {
    fiducial = qlds::random_fiducial(d, seed);
    j["seed"] = seed;
  } else {
    qlds::CVector raw = parse_fiducial(fiducial_arg, d);
    const double n = raw.norm();
    if (n == 0.0) throw std::invalid_argument("--fiducial: zero vector");
    fiducial = raw / n;
  }
  const qlds::CoherentFamily family(system, fiducial, tol);

  Json fid = Json::array();
  for (int i = 0; i < d; ++i) {
    fid.push_back({fiducial(i).real(), fiducial(i).imag()});
  }
  j["fiducial"] = std::move(fid);

  double overlap_residual = 0.0;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int g = 0; g < d; ++g) {
        for (int dl = 0; dl < d; ++dl) {
          overlap_residual = std::max(
              overlap_residual, std::abs(family.overlap(a, b, g, dl) -
                                         family.overlap_direct(a, b, g, dl)));
        }
      }
    }
  }

  double pair_residual = 0.0;
  for (int first = 0; first < d * d; ++first) {
    for (int second = first + 1; second < d * d; ++second) {
      const int a = first / d, b = first % d;
      const int g = second / d, dl = second % d;
      const qlds::AdditivityOperator closed =
          family.pair_additivity(a, b, g, dl, tol);
      const qlds::AdditivityOperator lattice = qlds::additivity_operator(
          family.subspace(a, b), family.subspace(g, dl), tol);
      pair_residual = std::max(
          pair_residual, qlds::frobenius_distance(closed.matrix, lattice.matrix));
    }
  }

  const double resolution = family.resolution_of_identity_residual();
  const bool pass = resolution <= tol.zero_tol && overlap_residual <= tol.zero_tol &&
                    pair_residual <= tol.zero_tol;
  j["resolution_residual"] = resolution;
  j["overlap_residual"] = overlap_residual;
  j["pair_d_residual"] = pair_residual;
  j["tolerance"] = tol.zero_tol;
  j["pass"] = pass;
  stamp(j, opts);
  print_json(j);
  return pass ? 0 : 2;
}

int run_classify(const GlobalOptions& opts, const std::string& input,
                 std::optional<double> epsilon) {
  const qlds::Tolerance& tol = qlds::session_tolerance();
  Json j;
  if (input == "-") {
    std::cin >> j;
  } else {
    std::ifstream in(input);
    if (!in) {
      std::cerr << "classify: cannot open " << input << "\n";
      return 1;
    }
    in >> j;
  }
  const qlds::Subspace h1 = qlds::subspace_from_json(j.at("h1"), tol);
  const qlds::Subspace h2 = qlds::subspace_from_json(j.at("h2"), tol);
  const qlds::DensityMatrix rho(qlds::matrix_from_json(j.at("rho")), tol);
  double eps = epsilon.value_or(j.value("epsilon", -1.0));

  const qlds::PairClassification c = qlds::classify_pair(h1, h2, rho, eps, tol);
  const qlds::AdditivityIdentities identities = qlds::verify_proposition1(h1, h2, tol);
  Json out = qlds::classification_to_json(c, identities);
  out["command"] = "classify";
  stamp(out, opts);
  print_json(out);
  return identities.pass(tol.zero_tol) ? 0 : 2;
}

int run_ds_table1(const GlobalOptions& opts, const std::vector<int>& employees,
                  const std::string& input, int frame_size, std::uint64_t seed,
                  int trials) {
  std::optional<qlds::MassFunction> mass;
  Json context = Json::object();
  if (!employees.empty()) {
    if (employees.size() != 3) {
      std::cerr << "--employees expects n1,n2,n3\n";
      return 1;
    }
    mass = qlds::employee_mass(employees[0], employees[1], employees[2]);
    context["employees"] = employees;
  } else if (!input.empty()) {
    std::ifstream in(input);
    if (!in) {
      std::cerr << "ds-table1: cannot open " << input << "\n";
      return 1;
    }
    Json j;
    in >> j;
    mass = qlds::mass_function_from_json(j);
  } else {
    // Random sparse mass function: up to 8 focal subsets, exponential weights.
    qlds::Frame frame(frame_size);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(1, frame.full_mask());
    std::exponential_distribution<double> expo(1.0);
    std::vector<std::pair<std::uint32_t, double>> focal;
    const int count = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < count; ++i) {
      const std::uint32_t mask = pick(rng);
      auto it = std::find_if(focal.begin(), focal.end(),
                             [mask](const auto& e) { return e.first == mask; });
      double w = expo(rng) + 1e-3;
      if (it == focal.end()) {
        focal.emplace_back(mask, w);
      } else {
        it->second += w;
      }
    }
    double total = 0.0;
    for (const auto& [m, w] : focal) total += w;
    for (auto& [m, w] : focal) w /= total;
    mass = qlds::MassFunction(frame, std::move(focal));
    context["seed"] = seed;
    context["frame_size"] = frame_size;
  }

  const qlds::Table1Report report = qlds::check_table1(*mass, trials, seed);
  Json out = qlds::table1_to_json(report);
  out["command"] = "ds-table1";
  out["mass_function"] = qlds::mass_function_to_json(*mass);
  out.update(context);
  if (!employees.empty()) {
    // Belief and plausibility of the first frame element (the under-35 set).
    out["ell"] = qlds::belief(*mass, 0b01);
    out["u"] = qlds::plausibility(*mass, 0b01);
  }
  stamp(out, opts);
  print_json(out);
  return report.all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Subspace-lattice probability toolkit: CHSH tables, coherent-state "
      "families, additivity classification, and belief-function checks"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  bool json_flag = false;
  app.add_flag("--json", json_flag, "JSON output (default)");
  app.add_flag("--csv", opts.csv, "CSV output where supported");
  app.add_flag("--no-timestamp", opts.no_timestamp,
               "omit the timestamp field from JSON reports");
  double tol_value = 0.0;
  auto* tol_opt = app.add_option(
      "--tol", tol_value,
      "override the residual tolerance (also honours env QLDS_TOL)");

  auto* chsh = app.add_subcommand("chsh", "CHSH probability table and bounds");
  std::optional<double> theta;
  chsh->add_option("--theta", theta,
                   "rotation angle in radians; default pi/8 = "
                   "0.39269908169872414");
  std::optional<double> a_re, a_im, b_re, b_im;
  chsh->add_option("--a-re", a_re, "Re a of the SU(2) setting");
  chsh->add_option("--a-im", a_im, "Im a");
  chsh->add_option("--b-re", b_re, "Re b");
  chsh->add_option("--b-im", b_im, "Im b");
  std::string sweep;
  chsh->add_option("--sweep", sweep, "theta sweep lo:hi:steps (steps intervals)");

  auto* lattice = app.add_subcommand(
      "lattice-demo", "three-dimensional worked example with residual report");

  auto* coherent = app.add_subcommand(
      "coherent", "coherent-family residual checks for odd dimension d");
  int d = 3;
  coherent->add_option("--d", d, "odd dimension >= 3");
  std::uint64_t seed = 0;
  coherent->add_option("--seed", seed, "seed for the random fiducial");
  std::string fiducial_arg;
  coherent->add_option("--fiducial", fiducial_arg,
                       "fiducial as inline JSON [[re,im],...] or a file path");

  auto* classify = app.add_subcommand(
      "classify", "classify a subspace pair against a state");
  std::string input = "-";
  classify->add_option("--input", input, "JSON file with h1, h2, rho ('-' = stdin)");
  std::optional<double> epsilon;
  classify->add_option("--epsilon", epsilon, "classification threshold");

  auto* ds = app.add_subcommand("ds-table1",
                                "belief/plausibility property table checks");
  std::vector<int> employees;
  ds->add_option("--employees", employees,
                 "n1,n2,n3 counts for the two-element frame example")
      ->delimiter(',');
  std::string ds_input;
  ds->add_option("--input", ds_input, "mass-function JSON file");
  int frame_size = 5;
  ds->add_option("--frame-size", frame_size, "random frame size (1..24)");
  std::uint64_t ds_seed = 0;
  ds->add_option("--seed", ds_seed, "seed for the random mass function");
  int trials = 200;
  ds->add_option("--trials", trials, "subset pairs per property row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (json_flag && opts.csv) {
    std::cerr << "--json and --csv are mutually exclusive\n";
    return 1;
  }
  if (tol_opt->count() > 0) opts.tol_override = tol_value;
  if (const int rc = apply_tolerance(opts); rc != 0) return rc;

  try {
    if (chsh->parsed()) return run_chsh(opts, theta, {a_re, a_im, b_re, b_im}, sweep);
    if (lattice->parsed()) return run_lattice_demo(opts);
    if (coherent->parsed()) return run_coherent(opts, d, seed, fiducial_arg);
    if (classify->parsed()) return run_classify(opts, input, epsilon);
    if (ds->parsed()) return run_ds_table1(opts, employees, ds_input, frame_size,
                                           ds_seed, trials);
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "residual check failed: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
