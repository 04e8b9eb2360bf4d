// s6p: exact verification and flows for the two-plectic six-sphere.
//
// Subcommands:
//   verify-all       run the full check battery, one line per statement
//   g2 basis         export the exact g2 basis and structure constants
//   flow             sample a one-parameter flow, write CSV/JSON trajectory
//   flow2            sample a commuting two-parameter flow on a grid
//   orbit-classify   classify the closure of exp(t xi) p
//   hamiltonian      evaluate the exact Hamiltonian of a solution
//
// Exit codes: 0 success, 1 check failure, 2 usage or I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "s6p/flows.hpp"
#include "s6p/g2.hpp"
#include "s6p/hdw.hpp"
#include "s6p/octonion.hpp"
#include "s6p/serialize.hpp"
#include "s6p/verify.hpp"

namespace {

using namespace s6p;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

// Tokens containing '/' parse as exact rationals, everything else as a
// decimal (whose binary value is itself an exact rational).
Vec7Q parse_point_exact(const std::string& csv) {
  const auto toks = split(csv, ',');
  if (toks.size() != 7)
    throw std::invalid_argument("--point needs 7 comma-separated values");
  Vec7Q p;
  for (int i = 0; i < 7; ++i)
    p[i] = toks[i].find('/') != std::string::npos
               ? rational_from_string(toks[i])
               : rational_from_double(std::stod(toks[i]));
  return p;
}

Mat7Q parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  Mat7Q m;
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) {
      const auto& cell = j.at(r).at(c);
      m[r][c] = cell.is_string()
                    ? rational_from_string(cell.get<std::string>())
                    : rational_from_double(cell.get<double>());
    }
  return m;
}

struct GeneratorChoice {
  int index = -1;
  std::string file;

  bool given() const { return index >= 0 || !file.empty(); }

  Mat7Q resolve(const G2Basis& g2) const {
    if (index >= 0) {
      if (index >= static_cast<int>(g2.elements.size()))
        throw std::invalid_argument("basis index out of range (0..13)");
      return g2.elements[index];
    }
    return parse_matrix_file(file);
  }
};

void add_generator_flags(CLI::App* cmd, GeneratorChoice& gen,
                         const std::string& name) {
  cmd->add_option("--" + name, gen.index,
                  "index of a canonical g2 basis element (0..13)");
  cmd->add_option("--" + name + "-file", gen.file,
                  "JSON file with a 7x7 matrix (numbers or \"p/q\" strings)");
}

int write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return kExitUsage;
  }
  out << content;
  return out.good() ? kExitOk : kExitUsage;
}

int cmd_verify_all(std::uint64_t seed, int samples, bool as_json) {
  std::vector<CheckResult> results;
  try {
    results = run_verification({seed, samples});
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  int passed = 0;
  for (const auto& r : results) passed += r.pass;

  if (as_json) {
    nlohmann::ordered_json j;
    j["seed"] = seed;
    j["samples"] = samples;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& r : results)
      j["checks"].push_back({{"slug", r.slug}, {"pass", r.pass}, {"detail", r.detail}});
    j["passed"] = passed;
    j["total"] = results.size();
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results)
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.slug
                << (r.detail.empty() ? "" : "  (" + r.detail + ")") << "\n";
    std::cout << passed << "/" << results.size() << " checks passed\n";
  }
  return passed == static_cast<int>(results.size()) ? kExitOk : kExitCheckFailed;
}

void print_drift(const Trajectory& traj) {
  const DriftReport rep = drift_report(traj);
  std::cout << "samples:            " << traj.points.size() << "\n";
  std::cout << "max norm defect:    " << rep.max_norm_defect << "\n";
  std::cout << "max omega defect:   " << rep.max_omega_defect << "\n";
  std::cout << "max HDW residual:   " << rep.max_residual_defect << "\n";
}

int write_trajectory(const Trajectory& traj, const std::string& out_path,
                     const std::string& format) {
  if (format == "json") return write_file(out_path, trajectory_to_json(traj));
  std::ostringstream os;
  trajectory_to_csv(traj, os);
  return write_file(out_path, os.str());
}

Vec7d parse_point_float_on_sphere(const std::string& csv) {
  const Vec7d p = to_vec7d(parse_point_exact(csv));
  if (std::abs(p.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("point is off the unit sphere by more than 1e-9");
  return p / p.norm();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact two-plectic geometry of the six-sphere"};
  app.require_subcommand(1);

  // verify-all
  auto* verify = app.add_subcommand("verify-all", "run every certified check");
  std::uint64_t seed = 7;
  int samples = 50;
  bool as_json = false;
  bool corrupt = false;
  verify->add_option("--seed", seed, "RNG seed for the random sweeps");
  verify->add_option("--samples", samples, "base sample count per sweep");
  verify->add_flag("--json", as_json, "emit a JSON report");
  verify->add_flag("--corrupt-epsilon", corrupt)->group("");  // test hook

  // g2 basis
  auto* g2cmd = app.add_subcommand("g2", "exceptional Lie algebra exports");
  g2cmd->require_subcommand(1);
  auto* basis = g2cmd->add_subcommand("basis", "write basis + structure constants");
  std::string out_path;
  basis->add_option("--out", out_path, "output JSON path")->required();

  // flow
  auto* flow = app.add_subcommand("flow", "one-parameter flow exp(t xi) p");
  GeneratorChoice flow_xi;
  add_generator_flags(flow, flow_xi, "xi");
  std::string flow_point;
  double t0 = 0, t1 = 10, dt = 0.1;
  std::string flow_out, flow_format = "csv";
  flow->add_option("--point", flow_point, "7 comma-separated coordinates")->required();
  flow->add_option("--t0", t0, "start time");
  flow->add_option("--t1", t1, "end time");
  flow->add_option("--dt", dt, "time step");
  flow->add_option("--out", flow_out, "trajectory output path")->required();
  flow->add_option("--format", flow_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // flow2
  auto* flow2 = app.add_subcommand("flow2", "two-parameter commuting flow");
  GeneratorChoice f2_xi, f2_eta;
  add_generator_flags(flow2, f2_xi, "xi");
  add_generator_flags(flow2, f2_eta, "eta");
  bool use_cartan = false;
  std::uint64_t cartan_seed = 7;
  flow2->add_flag("--cartan", use_cartan,
                  "use a computed Cartan pair as (xi, eta)");
  flow2->add_option("--seed", cartan_seed, "seed for --cartan");
  std::string f2_point, f2_grid = "6.3x6.3x0.1", f2_out, f2_format = "csv";
  flow2->add_option("--point", f2_point, "7 comma-separated coordinates")->required();
  flow2->add_option("--grid", f2_grid, "grid spec T1xT2xD");
  flow2->add_option("--out", f2_out, "trajectory output path")->required();
  flow2->add_option("--format", f2_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // orbit-classify
  auto* orbit = app.add_subcommand("orbit-classify", "closure of exp(t xi) p");
  GeneratorChoice orbit_xi;
  add_generator_flags(orbit, orbit_xi, "xi");
  std::string orbit_point;
  double tol = 1e-6;
  orbit->add_option("--point", orbit_point, "7 comma-separated coordinates")->required();
  orbit->add_option("--tol", tol, "frequency / projection tolerance");

  // hamiltonian
  auto* ham = app.add_subcommand("hamiltonian", "evaluate exact Hamiltonians");
  GeneratorChoice ham_xi, ham_eta;
  add_generator_flags(ham, ham_xi, "xi");
  add_generator_flags(ham, ham_eta, "eta");
  std::string ham_point, ham_export;
  ham->add_option("--point", ham_point, "7 comma-separated coordinates")->required();
  ham->add_option("--export", ham_export,
                  "also write the Hamiltonian as a JSON term list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      test_hooks::corrupt_multiplication_table = corrupt;
      return cmd_verify_all(seed, samples, as_json);
    }

    if (*basis) {
      const G2Basis g2 = compute_g2_basis();
      return write_file(out_path, g2_basis_to_json(g2) + "\n");
    }

    if (*flow) {
      if (!flow_xi.given()) {
        std::cerr << "usage error: flow needs --xi or --xi-file\n";
        return kExitUsage;
      }
      const G2Basis g2 = compute_g2_basis();
      const Mat7d xi = to_mat7d(flow_xi.resolve(g2));
      const Vec7d p = parse_point_float_on_sphere(flow_point);
      const Trajectory traj = flow_dim1(xi, p, t0, t1, dt);
      const int rc = write_trajectory(traj, flow_out, flow_format);
      if (rc != kExitOk) return rc;
      print_drift(traj);
      return kExitOk;
    }

    if (*flow2) {
      const G2Basis g2 = compute_g2_basis();
      Mat7Q xi_q, eta_q;
      if (use_cartan) {
        const CartanPair pair = cartan_subalgebra(g2, cartan_seed);
        xi_q = pair.h1;
        eta_q = pair.h2;
      } else {
        if (!f2_xi.given() || !f2_eta.given()) {
          std::cerr << "usage error: flow2 needs --xi and --eta (or --cartan)\n";
          return kExitUsage;
        }
        xi_q = f2_xi.resolve(g2);
        eta_q = f2_eta.resolve(g2);
      }
      const auto dims = split(f2_grid, 'x');
      if (dims.size() != 3) {
        std::cerr << "usage error: --grid expects T1xT2xD\n";
        return kExitUsage;
      }
      FlowGrid grid{std::stod(dims[0]), std::stod(dims[1]), std::stod(dims[2])};
      const Vec7d p = parse_point_float_on_sphere(f2_point);
      const Trajectory traj =
          flow_dim2(to_mat7d(xi_q), to_mat7d(eta_q), p, grid);
      const int rc = write_trajectory(traj, f2_out, f2_format);
      if (rc != kExitOk) return rc;
      print_drift(traj);
      return kExitOk;
    }

    if (*orbit) {
      if (!orbit_xi.given()) {
        std::cerr << "usage error: orbit-classify needs --xi or --xi-file\n";
        return kExitUsage;
      }
      const G2Basis g2 = compute_g2_basis();
      const Mat7d xi = to_mat7d(orbit_xi.resolve(g2));
      const Vec7d p = parse_point_float_on_sphere(orbit_point);
      const OrbitClass oc = orbit_closure_classify(xi, p, tol);
      std::cout << "class:       " << to_string(oc.tag) << "\n";
      std::cout << "dependence:  " << to_string(oc.dependence) << "\n";
      std::cout << "frequencies:";
      for (double f : oc.frequencies) std::cout << " " << f;
      std::cout << "\n";
      return kExitOk;
    }

    if (*ham) {
      if (!ham_xi.given()) {
        std::cerr << "usage error: hamiltonian needs --xi or --xi-file\n";
        return kExitUsage;
      }
      const G2Basis g2 = compute_g2_basis();
      const Mat7Q xi = ham_xi.resolve(g2);
      const Vec7Q p = parse_point_exact(ham_point);
      const Rational n2 = norm2(p);
      if (std::abs(to_double(n2) - 1.0) > 2e-9) {
        std::cerr << "error: point is off the unit sphere\n";
        return kExitUsage;
      }
      if (!annihilates_omega(xi)) {
        std::cerr << "error: xi does not lie in g2\n";
        return kExitUsage;
      }

      if (ham_eta.given()) {
        const Mat7Q eta = ham_eta.resolve(g2);
        if (!annihilates_omega(eta)) {
          std::cerr << "error: eta does not lie in g2\n";
          return kExitUsage;
        }
        const Mat7Q comm = bracket(xi, eta);
        if (!is_zero(comm)) {
          double worst = 0;
          for (const auto& row : comm)
            for (const auto& x : row)
              worst = std::max(worst, std::abs(to_double(x)));
          std::cerr << "error: generators do not commute; |[xi,eta]|_max = "
                    << worst << "\n";
          return kExitUsage;
        }
        const HDW2Solution sol = hdw_dim2(xi, eta);
        std::cout << "H_(xi,eta)(p) = " << to_string(sol.hamiltonian.eval(p))
                  << "\n";
        if (!ham_export.empty())
          return write_file(
              ham_export,
              form_to_json(PolyForm::from_function(sol.hamiltonian)) + "\n");
        return kExitOk;
      }

      const HDW1Solution sol = hdw_dim1(xi);
      // Components of the Hamiltonian 1-form on the projected coordinate
      // frame e_i - (p_i/|p|^2) p, i skipping the largest coordinate.
      int pivot = 0;
      for (int i = 0; i < 7; ++i)
        if (abs(p[i]) > abs(p[pivot])) pivot = i;
      std::cout << "H_xi on the tangent coordinate frame at p:\n";
      for (int i = 0; i < 7; ++i) {
        if (i == pivot) continue;
        Vec7Q e{};
        e[i] = 1;
        const Vec7Q b = sub(e, scale(p[i] / n2, p));
        const std::array<Vec7Q, 1> arg{b};
        std::cout << "  H(e" << (i + 1) << " - <e" << (i + 1)
                  << ",p>p) = " << to_string(evaluate(sol.hamiltonian, p, arg))
                  << "\n";
      }
      if (!ham_export.empty())
        return write_file(ham_export, form_to_json(sol.hamiltonian) + "\n");
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
