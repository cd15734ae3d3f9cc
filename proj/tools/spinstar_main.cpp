#include "spinstar/csv.hpp"
#include "spinstar/entanglement.hpp"
#include "spinstar/model.hpp"
#include "spinstar/sweeps.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace {

using namespace spinstar;

Scheme parse_scheme(const std::string& s) {
  if (s == "hom") return Scheme::Homogeneous;
  if (s == "A" || s == "a") return Scheme::TypeA;
  if (s == "B" || s == "b") return Scheme::TypeB;
  throw std::invalid_argument("unknown scheme '" + s + "' (expected hom, A or B)");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, sep)) parts.push_back(item);
  return parts;
}

double to_double(const std::string& s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad number '" + s + "'");
  return v;
}

Axis parse_axis(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 4) {
    throw std::invalid_argument("--axis expects name:min:max:N, got '" + s + "'");
  }
  Axis axis;
  axis.name = parts[0];
  axis.min = to_double(parts[1]);
  axis.max = to_double(parts[2]);
  axis.points = static_cast<int>(std::stol(parts[3]));
  return axis;
}

std::pair<double, double> parse_bracket(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) throw std::invalid_argument("--bracket expects lo:hi, got '" + s + "'");
  return {to_double(parts[0]), to_double(parts[1])};
}

struct CommonFlags {
  std::string scheme = "hom";
  double c = 0.0;
  double x = 1.0;
  double t = 0.01;
  double omega0 = 1.0;
};

void header(std::ostream& os, const std::string& what) {
  os << "# " << artifact_version() << '\n';
  os << "# " << negativity_convention_note() << '\n';
  os << "# " << what << '\n';
}

int run_spectrum(const CommonFlags& flags) {
  const SpinStarParams p = make_params(parse_scheme(flags.scheme), flags.c, flags.x, flags.omega0);
  const EigenSystem es = eigh(build_hamiltonian(p));
  std::ostringstream what;
  what << "spectrum scheme=" << to_string(p.scheme) << " c=" << format_double(p.c)
       << " x=" << format_double(p.x) << " omega0=" << format_double(p.omega0);
  header(std::cout, what.str());
  std::cout << "level,energy\n";
  for (Eigen::Index k = 0; k < es.dim(); ++k) {
    std::cout << k << ',' << format_double(es.values[k]) << '\n';
  }
  return 0;
}

int run_verify(const CommonFlags& flags) {
  std::vector<std::pair<double, double>> grid;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      grid.emplace_back(0.5 + (10.0 - 0.5) * i / 9, 0.2 + (8.0 - 0.2) * j / 9);
    }
  }
  const ValidationReport report = validate_appendix(grid, flags.omega0);
  std::cout << report.to_text();
  return 0;  // findings are report content, not failures
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"thermal tripartite entanglement of a four-spin star network"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::vector<std::string> axis_args;
  std::string obs_arg = "N123";
  std::string id_arg;
  std::string bracket_arg;
  double tol = -1.0;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--scheme", flags.scheme, "coupling scheme: hom, A or B");
    cmd->add_option("--c", flags.c, "base coupling, units of omega0");
    cmd->add_option("--x", flags.x, "inhomogeneity parameter");
    cmd->add_option("--t", flags.t, "temperature k_B T / omega0");
    cmd->add_option("--omega0", flags.omega0, "Bohr frequency (energy unit)");
    cmd->add_option("--tol", tol, "tolerance override");
    return cmd;
  };

  auto* spectrum_cmd = add_common(app.add_subcommand("spectrum", "16 sorted energies"));
  auto* sweep_cmd = add_common(app.add_subcommand("sweep", "parameter-grid observables"));
  sweep_cmd->add_option("--axis", axis_args, "swept axis name:min:max:N (once or twice)");
  sweep_cmd->add_option("--obs", obs_arg, "comma-separated observable list");
  auto* crossing_cmd = add_common(app.add_subcommand("crossing", "ground-level crossings"));
  crossing_cmd->add_option("--axis", axis_args, "swept axis: name or name:min:max:N");
  crossing_cmd->add_option("--bracket", bracket_arg, "search bracket lo:hi");
  auto* maximize_cmd = add_common(app.add_subcommand("maximize", "negativity maximum over x"));
  maximize_cmd->add_option("--bracket", bracket_arg, "x bracket lo:hi")->required();
  auto* figure_cmd = add_common(app.add_subcommand("figure", "named figure data"));
  figure_cmd->add_option("--id", id_arg, "figure id")->required();
  auto* verify_cmd = add_common(app.add_subcommand("verify", "closed-form cross-validation report"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    if (spectrum_cmd->parsed()) return run_spectrum(flags);

    if (sweep_cmd->parsed()) {
      SweepSpec spec;
      spec.scheme = parse_scheme(flags.scheme);
      spec.omega0 = flags.omega0;
      for (const auto& arg : axis_args) spec.axes.push_back(parse_axis(arg));
      std::set<std::string> swept;
      for (const auto& axis : spec.axes) swept.insert(axis.name);
      if (!swept.count("c")) spec.fixed["c"] = flags.c;
      if (!swept.count("x")) spec.fixed["x"] = spec.scheme == Scheme::Homogeneous ? 1.0 : flags.x;
      if (!swept.count("t")) spec.fixed["t"] = flags.t;
      spec.exact_zero_temperature = sweep_cmd->count("--t") > 0 && flags.t == 0.0;
      for (const auto& name : split(obs_arg, ',')) {
        const auto obs = parse_observable(name);
        if (!obs) throw std::invalid_argument("unknown observable '" + name + "'");
        spec.observables.push_back(*obs);
      }
      write_csv(std::cout, run_sweep(spec));
      return 0;
    }

    if (crossing_cmd->parsed()) {
      CrossingSearch search;
      search.base = make_params(parse_scheme(flags.scheme), flags.c, flags.x, flags.omega0);
      if (tol > 0.0) search.gap_tol = tol;
      if (axis_args.size() > 1) throw std::invalid_argument("crossing sweeps a single axis");
      if (!axis_args.empty()) {
        const auto parts = split(axis_args[0], ':');
        search.axis = parts[0];
        if (parts.size() == 4) {
          const Axis axis = parse_axis(axis_args[0]);
          search.lo = axis.min;
          search.hi = axis.max;
          search.scan_points = axis.points;
        } else if (parts.size() != 1) {
          throw std::invalid_argument("--axis expects name or name:min:max:N");
        }
      } else {
        search.axis = "c";
      }
      if (!bracket_arg.empty()) {
        std::tie(search.lo, search.hi) = parse_bracket(bracket_arg);
      }
      if (!(search.lo < search.hi)) {
        throw std::invalid_argument("crossing needs a bracket (--bracket lo:hi or --axis name:min:max:N)");
      }
      const auto points = find_level_crossing(search);

      std::ostringstream what;
      what << "crossing scheme=" << to_string(search.base.scheme)
           << " axis=" << search.axis << " bracket=[" << format_double(search.lo) << ", "
           << format_double(search.hi) << "] c=" << format_double(search.base.c)
           << " x=" << format_double(search.base.x) << " t=" << format_double(flags.t)
           << " omega0=" << format_double(search.base.omega0);
      header(std::cout, what.str());
      std::cout << search.axis << ",gap\n";
      for (double at : points) {
        const double c = search.axis == "c" ? at : search.base.c;
        const double x = search.axis == "x" ? at : search.base.x;
        const EigenSystem es = eigh(build_hamiltonian(
            make_params(search.base.scheme, c, x, search.base.omega0)));
        std::cout << format_double(at) << ',' << format_double(es.values[1] - es.values[0])
                  << '\n';
      }
      return 0;
    }

    if (maximize_cmd->parsed()) {
      const auto [lo, hi] = parse_bracket(bracket_arg);
      const double xtol = tol > 0.0 ? tol : 1e-6;
      const MaximumResult res = find_negativity_maximum(
          parse_scheme(flags.scheme), flags.c, flags.t, lo, hi, flags.omega0, xtol);
      std::ostringstream what;
      what << "maximize scheme=" << flags.scheme << " c=" << format_double(flags.c)
           << " t=" << format_double(flags.t) << " bracket=[" << format_double(lo) << ", "
           << format_double(hi) << "] omega0=" << format_double(flags.omega0);
      header(std::cout, what.str());
      std::cout << "x_M,N123\n";
      std::cout << format_double(res.x_m) << ',' << format_double(res.n_max) << '\n';
      return 0;
    }

    if (figure_cmd->parsed()) {
      std::optional<double> c_override;
      if (figure_cmd->count("--c") > 0) c_override = flags.c;
      write_csv(std::cout, reproduce_figure(id_arg, c_override));
      return 0;
    }

    if (verify_cmd->parsed()) return run_verify(flags);

    std::cerr << "no subcommand\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 1;
  }
}
