// dkfield: verification suites, residual evaluators, and the dual-charge
// FDTD simulator behind one command-line tool.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dkfield/extended.hpp"
#include "dkfield/fdtd.hpp"
#include "dkfield/json_io.hpp"
#include "dkfield/suites.hpp"

namespace {

using namespace dkf;

int env_threads() {
  const char* v = std::getenv("DKFIELD_THREADS");
  if (!v) return 1;
  const int n = std::atoi(v);
  return n >= 1 ? n : 1;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct VerifyOptions {
  std::string suite;
  std::uint64_t seed = 1;
  int trials = 100;
  double tolerance = 0.0;
  double chi = 0.7;
  std::string out;
};

int cmd_verify(const VerifyOptions& opt) {
  SuiteConfig cfg;
  cfg.seed = opt.seed;
  cfg.trials = opt.trials;
  cfg.tolerance_override = opt.tolerance;
  cfg.chi = opt.chi;
  std::vector<CheckResult> results;
  try {
    results = run_suite_by_name(opt.suite, cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what()
              << "\nusage: dkfield verify {algebra|roundtrip|lorentz|sectors|equivalence|duality}\n";
    return 2;
  }
  print_report(std::cout, results);
  if (!opt.out.empty()) {
    std::ofstream os(opt.out);
    if (!os) {
      std::cerr << "error: cannot write " << opt.out << "\n";
      return 2;
    }
    write_report_json(os, "verify " + opt.suite, results);
  }
  return all_pass(results) ? 0 : 1;
}

struct ResidualOptions {
  std::string spec_path;
  std::string system = "dk";
  double mass = 1.0;
  int points = 5;
  std::uint64_t seed = 1;
  double box = 1.0;
  std::string out;
};

void emit_row(std::ostream& os, const Vec4d& x, const std::string& eq, double v) {
  os << fmt(x[0]) << ',' << fmt(x[1]) << ',' << fmt(x[2]) << ',' << fmt(x[3]) << ',' << eq << ','
     << fmt(v) << '\n';
}

int cmd_residual(const ResidualOptions& opt) {
  json spec;
  try {
    spec = load_json_file(opt.spec_path);
  } catch (const json::parse_error& e) {
    std::cerr << "error: malformed JSON in " << opt.spec_path << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  MultipletField field;
  std::optional<MultipletField> currents;
  try {
    field = field_from_json(spec);
    if (spec.is_object() && spec.contains("currents"))
      currents = field_from_json(spec.at("currents"));
  } catch (const std::exception& e) {
    std::cerr << "error: bad field spec: " << e.what() << "\n";
    return 2;
  }
  const MultipletField* cur = currents ? &*currents : nullptr;

  std::ofstream file_out;
  if (!opt.out.empty()) {
    file_out.open(opt.out);
    if (!file_out) {
      std::cerr << "error: cannot write " << opt.out << "\n";
      return 2;
    }
  }
  std::ostream& os = opt.out.empty() ? std::cout : file_out;
  os << "x0,x1,x2,x3,equation,abs_residual\n";

  static const std::array<std::string, 6> pair_names{"01", "02", "03", "23", "31", "12"};
  std::mt19937_64 rng(opt.seed);
  for (int p = 0; p < opt.points; ++p) {
    const Vec4d x = random_point(rng, opt.box);
    if (opt.system == "dk") {
      const DkResidual r = dk_residual(field, opt.mass, x);
      emit_row(os, x, "div_vector", std::abs(r.div_vector));
      emit_row(os, x, "div_pseudovector", std::abs(r.div_pseudovector));
      for (int k = 0; k < 4; ++k) {
        emit_row(os, x, "vector_eq_" + std::to_string(k),
                 std::abs(r.vector_eq[static_cast<std::size_t>(k)]));
        emit_row(os, x, "pseudovector_eq_" + std::to_string(k),
                 std::abs(r.pseudovector_eq[static_cast<std::size_t>(k)]));
      }
      for (std::size_t s = 0; s < 6; ++s)
        emit_row(os, x, "antisym_eq_" + pair_names[s], std::abs(r.antisym_eq[s]));
    } else if (opt.system == "proca") {
      ProcaResidual r;
      try {
        r = proca_vector_residual(field, opt.mass, x);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      emit_row(os, x, "lorentz", std::abs(r.lorentz));
      for (int k = 0; k < 4; ++k) {
        emit_row(os, x, "field_eq_" + std::to_string(k),
                 std::abs(r.field_eq[static_cast<std::size_t>(k)]));
        emit_row(os, x, "bianchi_" + std::to_string(k),
                 std::abs(r.bianchi[static_cast<std::size_t>(k)]));
      }
      for (std::size_t s = 0; s < 6; ++s)
        emit_row(os, x, "curl_eq_" + pair_names[s], std::abs(r.curl_eq[s]));
    } else if (opt.system == "pseudoproca") {
      PseudoProcaResidual r;
      try {
        r = pseudovector_proca_residual(field, opt.mass, x);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      emit_row(os, x, "lorentz", std::abs(r.lorentz));
      for (int k = 0; k < 4; ++k) {
        emit_row(os, x, "field_eq_" + std::to_string(k),
                 std::abs(r.field_eq[static_cast<std::size_t>(k)]));
        emit_row(os, x, "dual_eq_" + std::to_string(k),
                 std::abs(r.dual_eq[static_cast<std::size_t>(k)]));
      }
      for (std::size_t s = 0; s < 6; ++s)
        emit_row(os, x, "curl_eq_" + pair_names[s], std::abs(r.curl_eq[s]));
    } else if (opt.system == "maxwell" || opt.system == "pseudomaxwell") {
      static const std::array<std::string, 3> xyz{"x", "y", "z"};
      auto common = [&](const auto& r) {
        emit_row(os, x, "gauss_e", std::abs(r.gauss_e));
        emit_row(os, x, "gauss_b", std::abs(r.gauss_b));
        for (int i = 0; i < 3; ++i) {
          emit_row(os, x, "faraday_" + xyz[static_cast<std::size_t>(i)],
                   std::abs(r.faraday.c[static_cast<std::size_t>(i)]));
          emit_row(os, x, "ampere_" + xyz[static_cast<std::size_t>(i)],
                   std::abs(r.ampere.c[static_cast<std::size_t>(i)]));
        }
        emit_row(os, x, "lorentz", std::abs(r.lorentz));
        for (int i = 0; i < 3; ++i) {
          emit_row(os, x, "e_potential_" + xyz[static_cast<std::size_t>(i)],
                   std::abs(r.e_from_potentials.c[static_cast<std::size_t>(i)]));
          emit_row(os, x, "b_potential_" + xyz[static_cast<std::size_t>(i)],
                   std::abs(r.b_from_potentials.c[static_cast<std::size_t>(i)]));
        }
        emit_row(os, x, "current_divergence_electric", std::abs(r.current_div.electric));
        emit_row(os, x, "current_divergence_magnetic", std::abs(r.current_div.magnetic));
      };
      if (opt.system == "maxwell")
        common(maxwell_residual(field, cur, x));
      else
        common(pseudo_maxwell_residual(field, cur, x));
    } else if (opt.system == "extended") {
      const ExtendedResidual r = extended_residual_from_potentials(field, cur, x);
      for (int a = 0; a < 4; ++a) {
        emit_row(os, x, "plus_div_" + std::to_string(a),
                 std::abs(r.plus_div[static_cast<std::size_t>(a)]));
        emit_row(os, x, "minus_div_" + std::to_string(a),
                 std::abs(r.minus_div[static_cast<std::size_t>(a)]));
        emit_row(os, x, "plus_dual_div_" + std::to_string(a),
                 std::abs(r.plus_dual_div[static_cast<std::size_t>(a)]));
        emit_row(os, x, "minus_dual_div_" + std::to_string(a),
                 std::abs(r.minus_dual_div[static_cast<std::size_t>(a)]));
      }
      emit_row(os, x, "current_divergence_electric", std::abs(r.current_div.electric));
      emit_row(os, x, "current_divergence_magnetic", std::abs(r.current_div.magnetic));
    } else {
      std::cerr << "error: unknown system '" << opt.system
                << "' (expected dk|proca|pseudoproca|maxwell|pseudomaxwell|extended)\n";
      return 2;
    }
  }
  return 0;
}

struct SimulateOptions {
  std::string config_path;
  std::string out = "sim";
};

int cmd_simulate(const SimulateOptions& opt) {
  json cfg;
  try {
    cfg = load_json_file(opt.config_path);
  } catch (const json::parse_error& e) {
    std::cerr << "error: malformed JSON in " << opt.config_path << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  GridSpec grid;
  double dt = 0.0;
  int steps = 0;
  CurrentPair currents;
  bool want_energy = true, want_gauss = true, want_fields = false;
  int snapshot_every = 0;
  std::string initial_type = "zero";
  int pw_axis = 2, pw_modes = 1;
  double pw_amplitude = 1.0;
  try {
    const auto& g = cfg.at("grid");
    const auto& n = g.at("n");
    grid.nx = n.at(0).get<int>();
    grid.ny = n.at(1).get<int>();
    grid.nz = n.at(2).get<int>();
    grid.h = g.at("h").get<double>();
    if (grid.nx < 2 || grid.ny < 2 || grid.nz < 2 || grid.h <= 0.0)
      throw std::invalid_argument("grid must have n >= 2 per axis and h > 0");
    if (cfg.contains("dt"))
      dt = cfg.at("dt").get<double>();
    else
      dt = cfg.at("cfl").get<double>() * cfl_limit(grid);
    steps = cfg.at("steps").get<int>();
    if (steps < 0) throw std::invalid_argument("steps must be >= 0");

    if (cfg.contains("initial") && cfg.at("initial").is_object()) {
      const auto& ini = cfg.at("initial");
      initial_type = ini.at("type").get<std::string>();
      if (initial_type == "planewave") {
        const std::string axis = ini.value("axis", "z");
        pw_axis = axis == "x" ? 0 : (axis == "y" ? 1 : 2);
        pw_amplitude = ini.value("amplitude", 1.0);
        pw_modes = ini.value("modes", 1);
      } else if (initial_type != "zero") {
        throw std::invalid_argument("initial.type must be \"zero\" or \"planewave\"");
      }
    }
    if (cfg.contains("currents") && !cfg.at("currents").is_null()) {
      auto read_current = [&](const char* key, UniformCurrent& out) {
        if (!cfg.at("currents").contains(key)) return;
        const auto& c = cfg.at("currents").at(key);
        const auto& amp = c.at("amp");
        out.amp = {amp.at(0).get<double>(), amp.at(1).get<double>(), amp.at(2).get<double>()};
        out.omega = c.value("omega", 0.0);
        out.phase = c.value("phase", 0.0);
      };
      read_current("electric", currents.electric);
      read_current("magnetic", currents.magnetic);
    }
    if (cfg.contains("outputs")) {
      want_energy = want_gauss = want_fields = false;
      for (const auto& o : cfg.at("outputs")) {
        const std::string s = o.get<std::string>();
        if (s == "energy") want_energy = true;
        else if (s == "gauss") want_gauss = true;
        else if (s == "fields") want_fields = true;
        else throw std::invalid_argument("unknown output: " + s);
      }
    }
    snapshot_every = cfg.value("snapshot_every", 0);
  } catch (const std::exception& e) {
    std::cerr << "error: bad simulation config: " << e.what() << "\n";
    return 2;
  }

  if (dt > cfl_limit(grid) * (1.0 + 1e-12)) {
    std::cerr << "error: CFL violated: dt = " << fmt(dt)
              << " exceeds the admissible dt = h/sqrt(3) = " << fmt(cfl_limit(grid)) << "\n";
    return 2;
  }

  DualFieldState state = initial_type == "planewave"
                             ? plane_wave_state(grid, dt, pw_axis, pw_amplitude, pw_modes)
                             : DualFieldState::zero(grid, dt);
  state.threads = env_threads();

  std::ofstream diag(opt.out + "_diagnostics.csv");
  if (!diag) {
    std::cerr << "error: cannot write " << opt.out << "_diagnostics.csv\n";
    return 2;
  }
  diag << "step,energy,max_divE_minus_rho,max_divB_plus_rhomag\n";
  std::ofstream fields;
  if (want_fields) {
    fields.open(opt.out + "_fields.csv");
    if (!fields) {
      std::cerr << "error: cannot write " << opt.out << "_fields.csv\n";
      return 2;
    }
    fields << "step,i,j,k,Ex,Ey,Ez,Bx,By,Bz\n";
  }

  auto write_diag = [&](int step) {
    diag << step << ',' << (want_energy ? fmt(energy(state)) : "0") << ','
         << (want_gauss ? fmt(max_div_e(state)) : "0") << ','
         << (want_gauss ? fmt(max_div_b(state)) : "0") << '\n';
  };
  auto write_snapshot = [&](int step) {
    if (!want_fields) return;
    for (int k = 0; k < grid.nz; ++k)
      for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i) {
          const std::size_t c = state.idx(i, j, k);
          fields << step << ',' << i << ',' << j << ',' << k << ',' << fmt(state.ex[c]) << ','
                 << fmt(state.ey[c]) << ',' << fmt(state.ez[c]) << ',' << fmt(state.bx[c]) << ','
                 << fmt(state.by[c]) << ',' << fmt(state.bz[c]) << '\n';
        }
  };

  write_diag(0);
  for (int s = 1; s <= steps; ++s) {
    fdtd_step(state, currents);
    write_diag(s);
    if (snapshot_every > 0 && s % snapshot_every == 0) write_snapshot(s);
  }
  if (want_fields && (snapshot_every == 0 || steps % snapshot_every != 0)) write_snapshot(steps);
  std::cout << "simulated " << steps << " steps on " << grid.nx << "x" << grid.ny << "x" << grid.nz
            << " grid; final energy = " << fmt(energy(state)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirac-Kahler / two-potential electrodynamics verification toolkit"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", vopt.suite,
                     "suite: algebra|roundtrip|lorentz|sectors|equivalence|duality")
      ->required();
  verify->add_option("--seed", vopt.seed, "random seed");
  verify->add_option("--trials", vopt.trials, "number of random trials")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tolerance", vopt.tolerance,
                     "override every check tolerance (defaults per suite: algebra/roundtrip/"
                     "sectors 1e-12, lorentz 1e-10 with homomorphism 1e-9, equivalence 1e-10, "
                     "duality 1e-12 algebra and 1e-10 invariance)");
  verify->add_option("--chi", vopt.chi, "duality rotation angle (duality suite)");
  verify->add_option("--out", vopt.out, "write a JSON report to this path");

  ResidualOptions ropt;
  CLI::App* residual = app.add_subcommand("residual", "evaluate field-equation residuals");
  residual->add_option("--spec", ropt.spec_path, "field spec JSON path")->required();
  residual
      ->add_option("--system", ropt.system,
                   "system: dk|proca|pseudoproca|maxwell|pseudomaxwell|extended")
      ->required();
  residual->add_option("--mass", ropt.mass, "mass parameter for the massive systems");
  residual->add_option("--points", ropt.points, "number of sample points")
      ->check(CLI::PositiveNumber);
  residual->add_option("--seed", ropt.seed, "random seed for sample points");
  residual->add_option("--box", ropt.box, "half-width of the sampling box");
  residual->add_option("--out", ropt.out, "CSV output path (default stdout)");

  SimulateOptions sopt;
  CLI::App* simulate = app.add_subcommand("simulate", "run the dual-charge FDTD solver");
  simulate->add_option("--config", sopt.config_path, "simulation config JSON path")->required();
  simulate->add_option("--out", sopt.out, "output file prefix");

  VerifyOptions dopt;
  dopt.suite = "duality";
  CLI::App* duality = app.add_subcommand("duality", "run the duality suite (verify duality)");
  duality->add_option("--chi", dopt.chi, "duality rotation angle");
  duality->add_option("--seed", dopt.seed, "random seed");
  duality->add_option("--trials", dopt.trials, "number of random trials")
      ->check(CLI::PositiveNumber);
  duality->add_option("--tolerance", dopt.tolerance, "override every check tolerance");
  duality->add_option("--out", dopt.out, "write a JSON report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // bad input
  }

  try {
    if (verify->parsed()) return cmd_verify(vopt);
    if (residual->parsed()) return cmd_residual(ropt);
    if (simulate->parsed()) return cmd_simulate(sopt);
    if (duality->parsed()) return cmd_verify(dopt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
