#pragma once

#include "abc/group.hpp"

#include <string>
#include <vector>

namespace abc {

// Run-length encoded word over {a, a^-1, b_1, b_1^-1, ...}. gen 0 is a,
// gen i >= 1 is b_i. Normalization merges adjacent equal bases and drops
// zero exponents. Text form: whitespace-separated tokens `a`, `a^-1`,
// `b1^3`, `b2^-2`.
struct WordTerm {
  int gen = 0;
  Integer exp = 0;
  bool operator==(const WordTerm&) const = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<WordTerm> terms);

  const std::vector<WordTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Word& append(int gen, Integer exp);
  friend Word concat(const Word& u, const Word& v);
  Word inverse() const;

  std::string to_string() const;  // empty word prints as "" (callers show "identity")
  static Word parse(const std::string& text);

  bool operator==(const Word&) const = default;

 private:
  std::vector<WordTerm> terms_;
};

// Fold of multiply over the word's letters. Homomorphic:
// from_word(uv) = from_word(u) * from_word(v).
GroupElement from_word(const Word& w, const GroupPtr& group);

// Canonical word a^{-m} prod_j b_j^{u_j} a^{m+shift} with m >= 0 minimal such
// that u = B^m * translation is integral. from_word(to_word(g)) == g.
Word to_word(const GroupElement& g, int cap = 256);

}  // namespace abc
