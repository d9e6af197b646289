#pragma once

#include <string>
#include <vector>

#include "semidyn/checks.hpp"
#include "semidyn/grid.hpp"
#include "semidyn/julia.hpp"

namespace semidyn {

/// Gray level of a class in mask images.
std::uint8_t gray_level(PixelClass c) noexcept;

/// Binary P5 image: "P5\n<w> <h>\n255\n" then one byte per pixel, row 0 on top.
std::string pgm_bytes(const IndicatorGrid& grid);
void write_pgm(const IndicatorGrid& grid, const std::string& path);

/// "re,im" header, one point per line with 17 significant digits.
std::string point_cloud_csv(const PointCloud& cloud);
void write_point_cloud_csv(const PointCloud& cloud, const std::string& path);

/// One line per check:
///   check=<name> semigroup=<label> residual=<r> threshold=<t> verdict=<v>
/// followed by indented "z=<re>,<im> class_before=<c> class_after=<c>" samples.
std::string render_report(const std::vector<CheckReport>& reports);
void write_report(const std::vector<CheckReport>& reports, const std::string& path);

/// Writes `bytes` to `path`, throwing Error(Io) naming the path on failure.
void write_file(const std::string& path, const std::string& bytes);

}  // namespace semidyn
