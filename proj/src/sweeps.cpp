#include "spinstar/sweeps.hpp"

#include "spinstar/csv.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spinstar {

const char* to_string(Observable o) {
  switch (o) {
    case Observable::N123: return "N123";
    case Observable::N1_23: return "N1_23";
    case Observable::N2_13: return "N2_13";
    case Observable::N3_12: return "N3_12";
    case Observable::C12: return "C12";
    case Observable::C13: return "C13";
    case Observable::C23: return "C23";
    case Observable::E0: return "E0";
    case Observable::E1: return "E1";
    case Observable::Gap: return "GAP";
    case Observable::Purity: return "PURITY";
  }
  return "?";
}

std::optional<Observable> parse_observable(std::string_view name) {
  static const std::pair<std::string_view, Observable> table[] = {
      {"N123", Observable::N123},   {"N1_23", Observable::N1_23},
      {"N2_13", Observable::N2_13}, {"N3_12", Observable::N3_12},
      {"C12", Observable::C12},     {"C13", Observable::C13},
      {"C23", Observable::C23},     {"E0", Observable::E0},
      {"E1", Observable::E1},       {"GAP", Observable::Gap},
      {"PURITY", Observable::Purity}};
  for (const auto& [key, value] : table) {
    if (key == name) return value;
  }
  return std::nullopt;
}

namespace {

constexpr double kGroundDegeneracyTol = 1e-9;

bool is_param_name(const std::string& name) {
  return name == "c" || name == "x" || name == "t";
}

struct PointParams {
  Scheme scheme;
  double omega0;
  double c, x, t;
  bool exact_zero_t;
};

DensityMatrix thermal_state(const PointParams& pt, const ComplexMatrix& h) {
  if (pt.t == 0.0) {
    if (!pt.exact_zero_t) {
      throw std::invalid_argument("t = 0 requires the explicit zero-temperature flag");
    }
    return ground_manifold_state(h, kGroundDegeneracyTol * pt.omega0);
  }
  return gibbs_state(h, Temperature{pt.t * pt.omega0});
}

// Evaluates all requested observables at one grid point, sharing the state.
std::vector<double> evaluate_point(const std::vector<Observable>& observables,
                                   const PointParams& pt) {
  const SpinStarParams params = make_params(pt.scheme, pt.c, pt.x, pt.omega0);
  const ComplexMatrix h = build_hamiltonian(params);

  bool need_state = false, need_neg = false, need_spectrum = false;
  for (Observable obs : observables) {
    switch (obs) {
      case Observable::E0:
      case Observable::E1:
      case Observable::Gap: need_spectrum = true; break;
      case Observable::N123:
      case Observable::N1_23:
      case Observable::N2_13:
      case Observable::N3_12: need_neg = true; need_state = true; break;
      default: need_state = true; break;
    }
  }

  EigenSystem es;
  if (need_spectrum) es = eigh(h);
  DensityMatrix state;
  DensityMatrix rho123;
  TripartiteNegativityBreakdown breakdown;
  if (need_state) {
    state = thermal_state(pt, h);
    rho123 = partial_trace(state, {Qubit::S1, Qubit::S2, Qubit::S3});
    if (need_neg) breakdown = tripartite_negativity(rho123);
  }

  std::vector<double> out;
  out.reserve(observables.size());
  for (Observable obs : observables) {
    switch (obs) {
      case Observable::N123: out.push_back(breakdown.n123); break;
      case Observable::N1_23: out.push_back(breakdown.n1_23); break;
      case Observable::N2_13: out.push_back(breakdown.n2_13); break;
      case Observable::N3_12: out.push_back(breakdown.n3_12); break;
      case Observable::C12:
        out.push_back(concurrence(partial_trace(rho123, {Qubit::S1, Qubit::S2})));
        break;
      case Observable::C13:
        out.push_back(concurrence(partial_trace(rho123, {Qubit::S1, Qubit::S3})));
        break;
      case Observable::C23:
        out.push_back(concurrence(partial_trace(rho123, {Qubit::S2, Qubit::S3})));
        break;
      case Observable::E0: out.push_back(es.values[0]); break;
      case Observable::E1: out.push_back(es.values[1]); break;
      case Observable::Gap: out.push_back(es.values[1] - es.values[0]); break;
      case Observable::Purity:
        out.push_back((state.op * state.op).trace().real());
        break;
    }
  }
  for (double v : out) {
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "non-finite observable at (c=" << pt.c << ", x=" << pt.x << ", t=" << pt.t << ")";
      throw std::runtime_error(msg.str());
    }
  }
  return out;
}

double evaluate_observable(Observable obs, const PointParams& pt) {
  return evaluate_point({obs}, pt)[0];
}

}  // namespace

void validate(const SweepSpec& spec) {
  if (spec.axes.empty() || spec.axes.size() > 2) {
    throw std::invalid_argument("sweep needs one or two axes");
  }
  std::set<std::string> swept;
  for (const auto& axis : spec.axes) {
    if (!is_param_name(axis.name)) {
      throw std::invalid_argument("unknown axis '" + axis.name + "' (expected c, x or t)");
    }
    if (!swept.insert(axis.name).second) {
      throw std::invalid_argument("axis '" + axis.name + "' swept twice");
    }
    if (axis.points < 2) throw std::invalid_argument("axis needs at least 2 points");
    if (!(axis.min < axis.max)) throw std::invalid_argument("axis needs min < max");
    if (axis.name == "t" && !(axis.min > 0.0)) {
      throw std::invalid_argument("swept temperature must stay positive");
    }
    if (axis.name == "x" && spec.scheme == Scheme::Homogeneous) {
      throw std::invalid_argument("homogeneous scheme pins x = 1; it cannot be swept");
    }
  }
  for (const char* name : {"c", "x", "t"}) {
    const bool is_swept = swept.count(name) > 0;
    const bool is_fixed = spec.fixed.count(name) > 0;
    if (is_swept && is_fixed) {
      throw std::invalid_argument(std::string("parameter '") + name + "' both swept and fixed");
    }
    if (!is_swept && !is_fixed) {
      throw std::invalid_argument(std::string("parameter '") + name + "' neither swept nor fixed");
    }
  }
  for (const auto& [name, value] : spec.fixed) {
    if (!is_param_name(name)) throw std::invalid_argument("unknown fixed parameter '" + name + "'");
    if (name == "t" && value == 0.0 && !spec.exact_zero_temperature) {
      throw std::invalid_argument("t = 0 requires the explicit zero-temperature flag");
    }
    if (name == "t" && value < 0.0) throw std::domain_error("negative temperature");
  }
  if (spec.observables.empty()) throw std::invalid_argument("no observables requested");
  if (!(spec.omega0 > 0.0)) throw std::invalid_argument("omega0 must be positive");
}

SweepTable run_sweep(const SweepSpec& spec) {
  validate(spec);

  const Axis& a0 = spec.axes[0];
  const bool two_d = spec.axes.size() == 2;
  const int n0 = a0.points;
  const int n1 = two_d ? spec.axes[1].points : 1;

  SweepTable table;
  for (const auto& axis : spec.axes) table.columns.push_back(axis.name);
  for (Observable obs : spec.observables) table.columns.push_back(to_string(obs));
  table.data.resize(static_cast<Eigen::Index>(n0) * n1,
                    static_cast<Eigen::Index>(table.columns.size()));

  for (int i = 0; i < n0; ++i) {
    for (int j = 0; j < n1; ++j) {
      PointParams pt{spec.scheme, spec.omega0, 0.0, 1.0, 0.0, spec.exact_zero_temperature};
      const auto assign = [&](const std::string& name, double value) {
        if (name == "c") pt.c = value;
        else if (name == "x") pt.x = value;
        else pt.t = value;
      };
      assign(a0.name, a0.at(i));
      if (two_d) assign(spec.axes[1].name, spec.axes[1].at(j));
      for (const auto& [name, value] : spec.fixed) assign(name, value);

      const Eigen::Index row = static_cast<Eigen::Index>(i) * n1 + j;
      Eigen::Index col = 0;
      table.data(row, col++) = a0.at(i);
      if (two_d) table.data(row, col++) = spec.axes[1].at(j);
      const auto values = evaluate_point(spec.observables, pt);
      for (double v : values) table.data(row, col++) = v;
    }
  }

  std::ostringstream meta;
  meta << "scheme=" << to_string(spec.scheme) << " omega0=" << format_double(spec.omega0);
  for (const auto& [name, value] : spec.fixed) meta << " " << name << "=" << format_double(value);
  table.header_lines.push_back("# " + artifact_version());
  table.header_lines.push_back("# " + negativity_convention_note());
  table.header_lines.push_back("# " + meta.str());
  for (const auto& axis : spec.axes) {
    std::ostringstream os;
    os << "# axis " << axis.name << ": [" << format_double(axis.min) << ", "
       << format_double(axis.max) << "], " << axis.points << " points, linear";
    table.header_lines.push_back(os.str());
  }
  if (spec.exact_zero_temperature) {
    table.header_lines.push_back("# t = 0: equal-weight ground manifold, degeneracy tol 1e-9*omega0");
  }
  return table;
}

namespace {

// Golden-section minimization of a V-shaped gap; the minimizer, not the value,
// is what matters, so plain golden steps are enough.
double golden_minimize(const std::function<double(double)>& f, double lo, double hi,
                       double xtol) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > xtol) {
    if (f1 <= f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  return (a + b) / 2.0;
}

}  // namespace

std::vector<double> find_level_crossing(const CrossingSearch& search) {
  if (search.axis != "c" && search.axis != "x") {
    throw std::invalid_argument("find_level_crossing: axis must be 'c' or 'x'");
  }
  if (!(search.lo < search.hi)) throw std::invalid_argument("find_level_crossing: empty bracket");
  if (search.scan_points < 8) throw std::invalid_argument("find_level_crossing: too few scan points");

  const auto gap_at = [&](double s) {
    const double c = search.axis == "c" ? s : search.base.c;
    const double x = search.axis == "x" ? s : search.base.x;
    const EigenSystem es =
        eigh(build_hamiltonian(make_params(search.base.scheme, c, x, search.base.omega0)));
    return es.values[1] - es.values[0];
  };

  const int n = search.scan_points;
  std::vector<double> s(n + 1), g(n + 1);
  for (int i = 0; i <= n; ++i) {
    s[i] = search.lo + (search.hi - search.lo) * i / n;
    g[i] = gap_at(s[i]);
  }

  const double accept = search.gap_tol * search.base.omega0;
  const double xtol = 1e-12 * std::max(1.0, search.hi - search.lo);
  std::vector<double> crossings;
  for (int i = 1; i < n; ++i) {
    if (g[i] <= g[i - 1] && g[i] <= g[i + 1]) {
      const double at = golden_minimize(gap_at, s[i - 1], s[i + 1], xtol);
      if (gap_at(at) <= accept) crossings.push_back(at);
    }
  }
  for (int i : {0, n}) {
    if (g[i] <= accept) crossings.push_back(s[i]);
  }
  std::sort(crossings.begin(), crossings.end());
  const double merge_tol = 10.0 * xtol;
  std::vector<double> unique_pts;
  for (double v : crossings) {
    if (unique_pts.empty() || v - unique_pts.back() > merge_tol) unique_pts.push_back(v);
  }
  return unique_pts;
}

MaximumResult find_negativity_maximum(Scheme scheme, double c, double t, double x_lo,
                                      double x_hi, double omega0, double xtol_frac) {
  if (!(x_lo < x_hi)) throw std::invalid_argument("find_negativity_maximum: empty bracket");
  const auto neg = [&](double x) {
    PointParams pt{scheme, omega0, c, x, t, t == 0.0};
    return evaluate_observable(Observable::N123, pt);
  };

  // any interior sample of a unimodal-maximum function stays >= min of the ends
  const double ends_min = std::min(neg(x_lo), neg(x_hi)) - 1e-12;
  const auto guarded = [&](double x) {
    const double v = neg(x);
    if (v < ends_min) {
      std::ostringstream msg;
      msg << "find_negativity_maximum: sample at x = " << x
          << " lies below both bracket ends (bracket is not unimodal)";
      throw std::runtime_error(msg.str());
    }
    return v;
  };

  constexpr double inv_phi = 0.6180339887498949;
  double a = x_lo, b = x_hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = guarded(x1), f2 = guarded(x2);
  const double xtol = xtol_frac * (x_hi - x_lo);
  while (b - a > xtol) {
    if (f1 >= f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = guarded(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = guarded(x2);
    }
  }
  const double x_m = (a + b) / 2.0;
  return MaximumResult{x_m, neg(x_m)};
}

namespace {

SweepTable custom_curve(const std::string& title, double lo, double hi, int points,
                        const std::vector<std::string>& columns,
                        const std::function<std::vector<double>(double)>& row_fn) {
  SweepTable table;
  table.columns = columns;
  table.data.resize(points, static_cast<Eigen::Index>(columns.size()));
  for (int i = 0; i < points; ++i) {
    const double x = lo + (hi - lo) * i / (points - 1);
    const auto row = row_fn(x);
    table.data(i, 0) = x;
    for (std::size_t k = 0; k < row.size(); ++k) {
      table.data(i, static_cast<Eigen::Index>(k + 1)) = row[k];
    }
  }
  table.header_lines.push_back("# " + artifact_version());
  table.header_lines.push_back("# " + negativity_convention_note());
  table.header_lines.push_back("# " + title);
  return table;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"neghom",   "ccost",         "lowt",
                                            "unhom-a-ccost", "psi2minus", "concurrences",
                                            "unhom-a-xcost", "unhom-a-tcost"};
  return ids;
}

SweepTable reproduce_figure(const std::string& id, std::optional<double> ccost_c_override) {
  constexpr int kSurface = 200;
  constexpr int kCurve = 400;
  constexpr double kLowT = 0.01;

  if (ccost_c_override && id != "ccost") {
    throw std::invalid_argument("only the ccost figure accepts a c override");
  }

  const auto surface = [&](Scheme scheme, const std::string& fixed_name, double fixed_value,
                           Axis a0, Axis a1) {
    SweepSpec spec;
    spec.scheme = scheme;
    spec.axes = {std::move(a0), std::move(a1)};
    spec.fixed[fixed_name] = fixed_value;
    if (scheme == Scheme::Homogeneous) spec.fixed["x"] = 1.0;
    spec.observables = {Observable::N123};
    return run_sweep(spec);
  };

  if (id == "neghom") {
    return surface(Scheme::Homogeneous, "x", 1.0, Axis{"c", 0.05, 10.0, kSurface},
                   Axis{"t", 0.01, 2.0, kSurface});
  }
  if (id == "ccost") {
    SweepSpec spec;
    spec.scheme = Scheme::Homogeneous;
    spec.axes = {Axis{"t", 0.01, 3.0, kCurve}};
    spec.fixed = {{"c", ccost_c_override.value_or(10.0)}, {"x", 1.0}};
    spec.observables = {Observable::N123};
    return run_sweep(spec);
  }
  if (id == "lowt") {
    SweepSpec spec;
    spec.scheme = Scheme::Homogeneous;
    spec.axes = {Axis{"c", 0.05, 6.0, kCurve}};
    spec.fixed = {{"t", kLowT}, {"x", 1.0}};
    spec.observables = {Observable::N123};
    return run_sweep(spec);
  }
  if (id == "unhom-a-ccost") {
    return surface(Scheme::TypeA, "c", 6.0, Axis{"x", 0.05, 8.0, kSurface},
                   Axis{"t", 0.01, 2.0, kSurface});
  }
  if (id == "unhom-a-xcost") {
    return surface(Scheme::TypeA, "x", 3.0, Axis{"c", 0.05, 10.0, kSurface},
                   Axis{"t", 0.01, 2.0, kSurface});
  }
  if (id == "unhom-a-tcost") {
    return surface(Scheme::TypeA, "t", kLowT, Axis{"c", 0.05, 10.0, kSurface},
                   Axis{"x", 0.05, 8.0, kSurface});
  }
  if (id == "psi2minus") {
    return custom_curve(
        "closed-form N(rho2minus(x)) vs thermal-state N123 (type A, c=6, t=0.01)", 0.5, 5.5,
        kCurve, {"x", "N_closed_form", "N_thermal"}, [&](double x) {
          PointParams pt{Scheme::TypeA, 1.0, 6.0, x, kLowT, false};
          return std::vector<double>{closed_form_negativity(x),
                                     evaluate_observable(Observable::N123, pt)};
        });
  }
  if (id == "concurrences") {
    return custom_curve(
        "pairwise concurrences and N123 of the rho2minus(x) family", 0.5, 5.5, kCurve,
        {"x", "C12", "C23", "C13", "N123"}, [&](double x) {
          const DensityMatrix rho = rho2minus(x).rho;
          const double c12 = concurrence(partial_trace(rho, {Qubit::S1, Qubit::S2}));
          const double c23 = concurrence(partial_trace(rho, {Qubit::S2, Qubit::S3}));
          const double c13 = concurrence(partial_trace(rho, {Qubit::S1, Qubit::S3}));
          return std::vector<double>{c12, c23, c13, tripartite_negativity(rho).n123};
        });
  }
  throw std::invalid_argument("unknown figure id '" + id + "'");
}

}  // namespace spinstar
