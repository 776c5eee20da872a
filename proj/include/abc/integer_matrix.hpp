#pragma once

#include "abc/numeric.hpp"

#include <iosfwd>
#include <string>

namespace abc {

// Square integer matrix with exact entries and a cached exact determinant.
// The determinant must be non-zero; construction rejects singular input.
class IntegerMatrix {
 public:
  // Entries row-major.
  IntegerMatrix(Eigen::Index n, const std::vector<Integer>& entries);
  explicit IntegerMatrix(IntMatrixData entries);

  Eigen::Index dim() const { return mat_.rows(); }
  const IntMatrixData& entries() const { return mat_; }
  const Integer& det() const { return det_; }
  const Integer& operator()(Eigen::Index i, Eigen::Index j) const {
    return mat_(i, j);
  }

  IntegerMatrix transpose() const { return IntegerMatrix(mat_.transpose().eval()); }

  // Exact k-th power, k >= 0.
  IntMatrixData pow(unsigned k) const;

  RationalMatrix to_rational() const;
  Eigen::MatrixXd to_real() const;

  bool operator==(const IntegerMatrix& other) const { return mat_ == other.mat_; }

  // Text format: first line n, then n lines of n signed decimal integers.
  // serialize() is canonical (single spaces, one row per line) so entries
  // round-trip bit-exactly.
  std::string serialize() const;
  static IntegerMatrix parse(std::istream& in);
  static IntegerMatrix load(const std::string& path);
  void save(const std::string& path) const;

 private:
  IntMatrixData mat_;
  Integer det_;
};

// Exact determinant of an integer matrix (rational LU underneath).
Integer exact_determinant(const IntMatrixData& m);

}  // namespace abc
