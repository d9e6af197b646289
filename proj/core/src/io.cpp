#include "semidyn/io.hpp"

#include <fstream>

#include "semidyn/error.hpp"
#include "semidyn/map_catalog.hpp"

namespace semidyn {

std::uint8_t gray_level(PixelClass c) noexcept {
  switch (c) {
    case PixelClass::Escaping:
    case PixelClass::JuliaBand: return 0;
    case PixelClass::Bounded:
    case PixelClass::Fatou: return 255;
    default: return 128;
  }
}

std::string pgm_bytes(const IndicatorGrid& grid) {
  std::string out = "P5\n" + std::to_string(grid.grid.width) + ' ' +
                    std::to_string(grid.grid.height) + "\n255\n";
  out.reserve(out.size() + grid.classes.size());
  for (PixelClass c : grid.classes) out.push_back(static_cast<char>(gray_level(c)));
  return out;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::Io, "write failed for '" + path + "'");
}

void write_pgm(const IndicatorGrid& grid, const std::string& path) {
  write_file(path, pgm_bytes(grid));
}

std::string point_cloud_csv(const PointCloud& cloud) {
  std::string out = "re,im\n";
  for (Complex z : cloud.points) {
    out += format_double(z.real());
    out += ',';
    out += format_double(z.imag());
    out += '\n';
  }
  return out;
}

void write_point_cloud_csv(const PointCloud& cloud, const std::string& path) {
  write_file(path, point_cloud_csv(cloud));
}

std::string render_report(const std::vector<CheckReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += "check=" + r.name + " semigroup=" + r.label + " residual=" + format_double(r.residual) +
           " threshold=" + format_double(r.threshold) + " verdict=" + to_string(r.verdict) + '\n';
    for (const auto& v : r.violations) {
      out += "  z=" + format_double(v.z.real()) + ',' + format_double(v.z.imag()) +
             " class_before=" + to_string(v.before) + " class_after=" + to_string(v.after) + '\n';
    }
  }
  return out;
}

void write_report(const std::vector<CheckReport>& reports, const std::string& path) {
  write_file(path, render_report(reports));
}

}  // namespace semidyn
