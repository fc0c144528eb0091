#pragma once

#include <iosfwd>
#include <string>

#include "cutlab/model.hpp"

namespace cutlab {

/// Parses fixed- or free-format MPS (ROWS / COLUMNS with INTORG markers /
/// RHS / BOUNDS). All numerics are read as exact rationals. RANGES and SOS
/// sections are rejected as unsupported.
Model parse_mps(std::istream& in);
Model parse_mps_string(const std::string& text);
Model parse_mps_file(const std::string& path);

}  // namespace cutlab
