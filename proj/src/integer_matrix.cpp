#include "abc/integer_matrix.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace abc {

Integer exact_determinant(const IntMatrixData& m) {
  RationalMatrix q(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  Rational det = Eigen::FullPivLU<RationalMatrix>(q).determinant();
  if (!is_integral(det))
    throw std::logic_error("integer matrix produced non-integer determinant");
  return numerator(det);
}

IntegerMatrix::IntegerMatrix(Eigen::Index n, const std::vector<Integer>& entries)
    : mat_(n, n) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  if (static_cast<Eigen::Index>(entries.size()) != n * n)
    throw std::invalid_argument("matrix entry count does not match dimension");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) mat_(i, j) = entries[i * n + j];
  det_ = exact_determinant(mat_);
  if (det_ == 0) throw std::invalid_argument("matrix is singular (det = 0)");
}

IntegerMatrix::IntegerMatrix(IntMatrixData entries) : mat_(std::move(entries)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() < 1)
    throw std::invalid_argument("matrix must be square and non-empty");
  det_ = exact_determinant(mat_);
  if (det_ == 0) throw std::invalid_argument("matrix is singular (det = 0)");
}

IntMatrixData IntegerMatrix::pow(unsigned k) const {
  IntMatrixData acc = IntMatrixData::Identity(dim(), dim());
  for (unsigned i = 0; i < k; ++i) acc = (acc * mat_).eval();
  return acc;
}

RationalMatrix IntegerMatrix::to_rational() const {
  RationalMatrix q(dim(), dim());
  for (Eigen::Index i = 0; i < dim(); ++i)
    for (Eigen::Index j = 0; j < dim(); ++j) q(i, j) = Rational(mat_(i, j));
  return q;
}

Eigen::MatrixXd IntegerMatrix::to_real() const {
  Eigen::MatrixXd r(dim(), dim());
  for (Eigen::Index i = 0; i < dim(); ++i)
    for (Eigen::Index j = 0; j < dim(); ++j)
      r(i, j) = static_cast<double>(mat_(i, j));
  return r;
}

std::string IntegerMatrix::serialize() const {
  std::ostringstream out;
  out << dim() << "\n";
  for (Eigen::Index i = 0; i < dim(); ++i) {
    for (Eigen::Index j = 0; j < dim(); ++j) {
      if (j) out << ' ';
      out << mat_(i, j);
    }
    out << "\n";
  }
  return out.str();
}

IntegerMatrix IntegerMatrix::parse(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n < 1) throw std::invalid_argument("matrix file: bad dimension line");
  std::vector<Integer> entries;
  entries.reserve(static_cast<std::size_t>(n * n));
  for (long long i = 0; i < n * n; ++i) {
    std::string tok;
    if (!(in >> tok))
      throw std::invalid_argument("matrix file: expected " + std::to_string(n * n) +
                                  " entries, got " + std::to_string(i));
    try {
      entries.emplace_back(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("matrix file: bad integer token '" + tok + "'");
    }
  }
  return IntegerMatrix(static_cast<Eigen::Index>(n), entries);
}

IntegerMatrix IntegerMatrix::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  return parse(in);
}

void IntegerMatrix::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write matrix file: " + path);
  out << serialize();
}

}  // namespace abc
