#pragma once

#include "spinstar/sweeps.hpp"

#include <ostream>
#include <string>

namespace spinstar {

/// Locale-independent formatting with 9 significant digits.
std::string format_double(double v);

/// Comment header lines ('#'-prefixed), one column-name row, comma-separated
/// data rows, '\n' line endings.
void write_csv(std::ostream& os, const SweepTable& table);

std::string artifact_version();
std::string negativity_convention_note();

}  // namespace spinstar
