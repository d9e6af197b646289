#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "semidyn/semidyn.hpp"

namespace testing {

inline semidyn::SemigroupSpec squares(double a = 2.0) {
  return semidyn::SemigroupSpec(
      {semidyn::MapDescriptor::power(2, {1.0, 0.0}), semidyn::MapDescriptor::power(2, {a, 0.0})},
      "squares");
}

inline semidyn::SemigroupSpec square() {
  return semidyn::SemigroupSpec({semidyn::MapDescriptor::power(2, {1.0, 0.0})}, "z^2");
}

inline semidyn::SemigroupSpec tcheb23() {
  return semidyn::SemigroupSpec(
      {semidyn::MapDescriptor::tchebyshev(2), semidyn::MapDescriptor::tchebyshev(3)}, "T2,T3");
}

inline semidyn::SemigroupSpec exp_pair() {
  return semidyn::SemigroupSpec({semidyn::MapDescriptor::exp_affine({1.0, 0.0}, {0.0, 0.0}),
                                 semidyn::MapDescriptor::exp_affine({-1.0, 0.0}, {0.0, 0.0})},
                                "e^z,e^-z");
}

inline semidyn::SemigroupSpec sine_pair() {
  return semidyn::SemigroupSpec(
      {semidyn::MapDescriptor::sine_affine({0.5, 0.0}, {0.0, 0.0}, 1),
       semidyn::MapDescriptor::sine_affine({0.5, 0.0}, {2.0 * 3.141592653589793, 0.0}, 1)},
      "sine");
}

inline semidyn::GridSpec window(double half, int size) {
  return {-half, half, -half, half, size, size};
}

/// Scratch directory removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("semidyn-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(++counter));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void spit(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

}  // namespace testing
