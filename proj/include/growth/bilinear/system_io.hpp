#ifndef GROWTH_BILINEAR_SYSTEM_IO_HPP
#define GROWTH_BILINEAR_SYSTEM_IO_HPP

#include <string>

#include "growth/bilinear/system.hpp"

namespace growth::bilinear {

/// Line format: `dim n`, `V0 ...`, `F ...`, `term q q1 q2 [coeff]` (1-based),
/// optional `states s1 ... sn`, `#` comments. Throws ParseError with the line number.
BilinearSystem parse_system(const std::string& text);
BilinearSystem load_system(const std::string& path);

std::string format_system(const BilinearSystem& s);

/// Reads a whole file; throws Error when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace growth::bilinear

#endif  // GROWTH_BILINEAR_SYSTEM_IO_HPP
