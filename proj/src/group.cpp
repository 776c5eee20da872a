#include "abc/group.hpp"

#include <sstream>
#include <stdexcept>

namespace abc {

namespace {

constexpr int kMembershipCap = 256;

RationalMatrix rational_inverse(const RationalMatrix& m) {
  Eigen::FullPivLU<RationalMatrix> lu(m);
  return lu.inverse();
}

}  // namespace

Group::Group(IntegerMatrix A) : A_(std::move(A)) {
  RationalMatrix a = A_.to_rational();
  B_ = a.transpose();
  Binv_ = rational_inverse(B_);
}

RationalVector Group::apply_acting_power(const Integer& k, RationalVector w) const {
  if (w.isZero()) return w;  // shortcut keeps a^j * a^l cheap for large shifts
  const RationalMatrix& step = (k >= 0) ? B_ : Binv_;
  for (Integer i = 0; i < abs(k); ++i) w = (step * w).eval();
  return w;
}

GroupElement::GroupElement(GroupPtr group)
    : group_(std::move(group)),
      shift_(0),
      translation_(RationalVector::Zero(group_->rank())) {}

GroupElement::GroupElement(GroupPtr group, Integer shift, RationalVector translation)
    : group_(std::move(group)),
      shift_(std::move(shift)),
      translation_(std::move(translation)) {
  if (translation_.size() != group_->rank())
    throw std::invalid_argument("translation dimension does not match group rank");
  RationalVector w = translation_;
  int m = 0;
  while (!is_integral(w)) {
    if (++m > kMembershipCap)
      throw std::invalid_argument(
          "translation is not in the direct-limit module (no B^m w integral "
          "within cap " + std::to_string(kMembershipCap) + ")");
    w = (group_->acting() * w).eval();
  }
}

bool GroupElement::is_identity() const {
  return shift_ == 0 && translation_.isZero();
}

GroupElement GroupElement::inverse() const {
  // (k, w)^{-1} = (-k, -B^{-k} w)
  RationalVector w = group_->apply_acting_power(-shift_, translation_);
  return GroupElement(group_, -shift_, (-w).eval());
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  if (g.group_ != h.group_ && !(g.group_->matrix() == h.group_->matrix()))
    throw std::invalid_argument("elements belong to different groups Gamma_A");
  RationalVector w = g.translation_ + g.group_->apply_acting_power(g.shift_, h.translation_);
  return GroupElement(g.group_, g.shift_ + h.shift_, std::move(w));
}

bool GroupElement::operator==(const GroupElement& other) const {
  return shift_ == other.shift_ && translation_ == other.translation_ &&
         (group_ == other.group_ || group_->matrix() == other.group_->matrix());
}

std::string GroupElement::to_string() const {
  std::ostringstream out;
  out << "(shift=" << shift_ << ", translation=[";
  for (Eigen::Index i = 0; i < translation_.size(); ++i) {
    if (i) out << ", ";
    out << translation_[i];
  }
  out << "])";
  return out.str();
}

GroupElement GroupElement::generator_a(const GroupPtr& group, const Integer& exp) {
  return GroupElement(group, exp, RationalVector::Zero(group->rank()));
}

GroupElement GroupElement::generator_b(const GroupPtr& group, Eigen::Index i,
                                       const Integer& exp) {
  if (i < 1 || i > group->rank())
    throw std::out_of_range("generator index b_i out of range");
  RationalVector w = RationalVector::Zero(group->rank());
  w[i - 1] = Rational(exp);
  return GroupElement(group, 0, std::move(w));
}

IntVector conjugate_power(const IntegerMatrix& A, Eigen::Index i, unsigned k) {
  if (i < 1 || i > A.dim()) throw std::out_of_range("generator index out of range");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  IntMatrixData Ak = A.pow(k);
  return Ak.row(i - 1).transpose();
}

}  // namespace abc
