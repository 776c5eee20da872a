#pragma once

#include "abc/integer_matrix.hpp"

#include <memory>
#include <string>

namespace abc {

// The group Gamma_A = < a, b_1..b_n | b_i b_j = b_j b_i,
//                                     a b_i a^{-1} = prod_j b_j^{A_ij} >
// realized as a semidirect product: elements are exact pairs
// (shift, translation) with shift in Z (the a-exponent) and translation in
// the ascending union of B^{-m} Z^n inside Q^n.
//
// Acting-matrix convention (read this before touching multiply):
// conjugation by a sends the translation e_i to the exponent vector
// (A_i1, ..., A_in), i.e. row i of A. As a linear map on column vectors that
// is w |-> B w with B = transpose(A). The presentation itself never names
// the transpose; every correctness test of this module leans on this choice:
//
//   (k1, w1) * (k2, w2) = (k1 + k2, w1 + B^{k1} w2),
//   a = (1, 0),  b_i = (0, e_i),  so  a b_i a^{-1} = (0, B e_i) = (0, row_i(A)).
class Group {
 public:
  explicit Group(IntegerMatrix A);

  Eigen::Index rank() const { return A_.dim(); }  // n = number of b-generators
  const IntegerMatrix& matrix() const { return A_; }
  const RationalMatrix& acting() const { return B_; }          // B = A^T
  const RationalMatrix& acting_inverse() const { return Binv_; }

  // B^k w for any integer k, exact.
  RationalVector apply_acting_power(const Integer& k, RationalVector w) const;

  static std::shared_ptr<const Group> make(IntegerMatrix A) {
    return std::make_shared<const Group>(std::move(A));
  }

 private:
  IntegerMatrix A_;
  RationalMatrix B_, Binv_;
};

using GroupPtr = std::shared_ptr<const Group>;

class GroupElement {
 public:
  // Identity of the given group.
  explicit GroupElement(GroupPtr group);
  // Raw normal form. Validates that the translation lies in the direct-limit
  // module (some B^m * translation is integral).
  GroupElement(GroupPtr group, Integer shift, RationalVector translation);

  const GroupPtr& group() const { return group_; }
  const Integer& shift() const { return shift_; }
  const RationalVector& translation() const { return translation_; }

  bool is_identity() const;
  GroupElement inverse() const;

  // Product in normal form. Throws on mismatched underlying matrices.
  friend GroupElement multiply(const GroupElement& g, const GroupElement& h);
  friend GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    return multiply(g, h);
  }

  bool operator==(const GroupElement& other) const;

  std::string to_string() const;

  static GroupElement generator_a(const GroupPtr& group, const Integer& exp = 1);
  // i is 1-based, matching the presentation's b_1..b_n.
  static GroupElement generator_b(const GroupPtr& group, Eigen::Index i,
                                  const Integer& exp = 1);

 private:
  GroupPtr group_;
  Integer shift_;
  RationalVector translation_;
};

// Row i (1-based) of A^k, exact: the exponent vector of a^k b_i a^{-k} in the
// b-generators. k >= 1.
IntVector conjugate_power(const IntegerMatrix& A, Eigen::Index i, unsigned k);

}  // namespace abc
