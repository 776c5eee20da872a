#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <string>

namespace abc {

// Exact arithmetic scalars. All group_core arithmetic is exact; no floating
// point enters that module.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using IntMatrixData = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline bool is_integral(const RationalVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_integral(v[i])) return false;
  return true;
}

// Fixed decimal formatting for doubles, stable across runs. %.17g round-trips.
std::string format_double(double x);

// FNV-1a 64-bit over a byte string; used for matrix/constants fingerprints in
// report headers.
std::uint64_t fnv1a64(const std::string& bytes);
std::string hash_hex(std::uint64_t h);

// Small deterministic RNG (splitmix64 core). std::mt19937_64 would also be
// deterministic per build, but the distributions are not portable; this keeps
// frozen randomized-test values identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi] inclusive.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1u;
    return lo + static_cast<std::int64_t>(next_u64() % span);
  }

  // Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double next_double(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

 private:
  std::uint64_t state_;
};

}  // namespace abc
