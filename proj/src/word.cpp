#include "abc/word.hpp"

#include <sstream>
#include <stdexcept>

namespace abc {

namespace {

void push_normalized(std::vector<WordTerm>& terms, int gen, Integer exp) {
  if (exp == 0) return;
  if (!terms.empty() && terms.back().gen == gen) {
    terms.back().exp += exp;
    if (terms.back().exp == 0) terms.pop_back();
    return;
  }
  terms.push_back({gen, std::move(exp)});
}

}  // namespace

Word::Word(std::vector<WordTerm> terms) {
  for (auto& t : terms) push_normalized(terms_, t.gen, std::move(t.exp));
}

Word& Word::append(int gen, Integer exp) {
  push_normalized(terms_, gen, std::move(exp));
  return *this;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  for (const auto& t : v.terms_) out.append(t.gen, t.exp);
  return out;
}

Word Word::inverse() const {
  Word out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    out.append(it->gen, -it->exp);
  return out;
}

std::string Word::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out << ' ';
    first = false;
    if (t.gen == 0)
      out << 'a';
    else
      out << 'b' << t.gen;
    if (t.exp != 1) out << '^' << t.exp;
  }
  return out.str();
}

Word Word::parse(const std::string& text) {
  Word out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::string base = tok;
    Integer exp = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      base = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      if (e.empty()) throw std::invalid_argument("word token missing exponent: " + tok);
      try {
        exp = Integer(e);
      } catch (const std::exception&) {
        throw std::invalid_argument("word token has bad exponent: " + tok);
      }
    }
    int gen;
    if (base == "a") {
      gen = 0;
    } else if (base.size() >= 2 && base[0] == 'b') {
      try {
        gen = std::stoi(base.substr(1));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad generator token: " + tok);
      }
      if (gen < 1) throw std::invalid_argument("generator index must be >= 1: " + tok);
    } else {
      throw std::invalid_argument("bad generator token: " + tok);
    }
    out.append(gen, exp);
  }
  return out;
}

GroupElement from_word(const Word& w, const GroupPtr& group) {
  GroupElement acc(group);
  for (const auto& t : w.terms()) {
    if (t.gen == 0)
      acc = acc * GroupElement::generator_a(group, t.exp);
    else
      acc = acc * GroupElement::generator_b(group, t.gen, t.exp);
  }
  return acc;
}

Word to_word(const GroupElement& g, int cap) {
  const auto& group = g.group();
  RationalVector u = g.translation();
  int m = 0;
  while (!is_integral(u)) {
    if (++m > cap)
      throw std::runtime_error("to_word: no integral B^m * translation within cap");
    u = (group->acting() * u).eval();
  }
  Word out;
  out.append(0, -m);
  for (Eigen::Index j = 0; j < u.size(); ++j)
    out.append(static_cast<int>(j) + 1, numerator(u[j]));
  out.append(0, Integer(m) + g.shift());
  return out;
}

}  // namespace abc
