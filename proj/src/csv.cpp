#include "spinstar/csv.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace spinstar {

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 9);
  if (res.ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const SweepTable& table) {
  for (const auto& line : table.header_lines) os << line << '\n';
  for (std::size_t k = 0; k < table.columns.size(); ++k) {
    if (k) os << ',';
    os << table.columns[k];
  }
  os << '\n';
  for (Eigen::Index r = 0; r < table.data.rows(); ++r) {
    for (Eigen::Index c = 0; c < table.data.cols(); ++c) {
      if (c) os << ',';
      os << format_double(table.data(r, c));
    }
    os << '\n';
  }
}

std::string artifact_version() { return "spinstar 1.0.0"; }

std::string negativity_convention_note() {
  return "negativity convention: N = ||rho^T_I||_1 - 1 (trace norm minus one; "
         "twice the halved convention)";
}

}  // namespace spinstar
