#pragma once

#include "spinstar/entanglement.hpp"
#include "spinstar/model.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spinstar {

enum class Observable { N123, N1_23, N2_13, N3_12, C12, C13, C23, E0, E1, Gap, Purity };

const char* to_string(Observable o);
std::optional<Observable> parse_observable(std::string_view name);

/// One linearly spaced swept parameter.
struct Axis {
  std::string name;  // "c", "x" or "t"
  double min = 0.0;
  double max = 0.0;
  int points = 2;

  double at(int i) const { return points == 1 ? min : min + (max - min) * i / (points - 1); }
};

/// A rectangular parameter sweep: one or two swept axes, fixed values for the
/// remainder of {c, x, t}, and the observables to evaluate at every point.
struct SweepSpec {
  Scheme scheme = Scheme::Homogeneous;
  double omega0 = 1.0;
  std::vector<Axis> axes;
  std::map<std::string, double> fixed;
  std::vector<Observable> observables;
  bool exact_zero_temperature = false;  // required to accept fixed t = 0
};

void validate(const SweepSpec& spec);

/// Row-major grid of computed observables with provenance comment lines.
struct SweepTable {
  std::vector<std::string> header_lines;
  std::vector<std::string> columns;
  Eigen::MatrixXd data;  // rows = points1 * points2, cols = axes + observables
};

SweepTable run_sweep(const SweepSpec& spec);

/// Level-crossing search: scan the E1 - E0 gap of the full spectrum along one
/// axis, then refine each dip by golden-section. Returned points have
/// gap <= gap_tol * omega0 and are sorted ascending.
struct CrossingSearch {
  SpinStarParams base;    // the non-swept parameters (c or x ignored on the swept axis)
  std::string axis;       // "c" or "x"
  double lo = 0.0;
  double hi = 0.0;
  int scan_points = 512;
  double gap_tol = 1e-9;
};

std::vector<double> find_level_crossing(const CrossingSearch& search);

struct MaximumResult {
  double x_m = 0.0;
  double n_max = 0.0;
};

/// Golden-section maximum of N123(x) of the reduced thermal state at fixed
/// (scheme, c, t). The bracket must contain a single interior maximum; an
/// interior sample below both bracket ends raises std::runtime_error.
MaximumResult find_negativity_maximum(Scheme scheme, double c, double t, double x_lo,
                                      double x_hi, double omega0 = 1.0,
                                      double xtol_frac = 1e-6);

/// The exact grid behind one of the named figures, at the documented default
/// resolution (200x200 surfaces, 400-point curves). The "ccost" curve defaults
/// to c = 10 (its caption value; the surrounding text says 6) and accepts an
/// override.
SweepTable reproduce_figure(const std::string& id,
                            std::optional<double> ccost_c_override = std::nullopt);

const std::vector<std::string>& figure_ids();

}  // namespace spinstar
