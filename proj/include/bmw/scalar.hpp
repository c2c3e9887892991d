#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bmw/poly.hpp"

namespace bmw {

struct MVar {
  static constexpr const char* name = "m";
};
struct RVar {
  static constexpr const char* name = "r";
};

// Laurent polynomial in l whose coefficients are rational functions in one
// further variable. With Var = MVar this is the ground ring Q(m)[l, l^-1].
template <class Var>
class Laurent {
 public:
  using Term = std::pair<int, RatFunc>;

  Laurent() = default;
  Laurent(long c) : Laurent(RatFunc(Rational(c))) {}  // NOLINT: literals
  Laurent(const Rational& c) : Laurent(RatFunc(c)) {}  // NOLINT
  explicit Laurent(RatFunc c, int lexp = 0) {
    if (!c.is_zero()) terms_.emplace_back(lexp, std::move(c));
  }

  static Laurent l(int k = 1) { return Laurent(RatFunc(Rational(1)), k); }
  static Laurent var() { return Laurent(RatFunc::var()); }

  // Builds from arbitrary (possibly repeated, possibly zero) terms.
  static Laurent from_terms(std::vector<Term> t) {
    std::sort(t.begin(), t.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    Laurent r;
    for (auto& [e, c] : t) {
      if (!r.terms_.empty() && r.terms_.back().first == e)
        r.terms_.back().second = r.terms_.back().second + c;
      else
        r.terms_.emplace_back(e, std::move(c));
      if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
    }
    return r;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one();
  }
  bool is_unit() const { return terms_.size() == 1; }
  bool is_l_free() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
  }
  // Coefficient of l^k.
  RatFunc coeff(int k) const {
    for (const auto& [e, c] : terms_)
      if (e == k) return c;
    return {};
  }

  friend bool operator==(const Laurent&, const Laurent&) = default;

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->first < i->first) {
        r.terms_.push_back(*j++);
      } else {
        RatFunc c = i->second + j->second;
        if (!c.is_zero()) r.terms_.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }
  friend Laurent operator-(const Laurent& a) {
    Laurent r = a;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
      Laurent r;
      r.terms_.emplace_back(a.terms_[0].first + b.terms_[0].first,
                            a.terms_[0].second * b.terms_[0].second);
      return r;
    }
    std::vector<Term> t;
    t.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) t.emplace_back(ea + eb, ca * cb);
    return from_terms(std::move(t));
  }
  Laurent& operator+=(const Laurent& b) { return *this = *this + b; }
  Laurent& operator-=(const Laurent& b) { return *this = *this - b; }
  Laurent& operator*=(const Laurent& b) { return *this = *this * b; }

  // Only units c*l^k are invertible in this ring.
  Laurent inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (!is_unit())
      throw std::domain_error("not invertible: " + to_string() +
                              " is not a monomial in l");
    return Laurent(terms_[0].second.inverse(), -terms_[0].first);
  }
  friend Laurent operator/(const Laurent& a, const Laurent& b) { return a * b.inverse(); }

  Rational eval_at(const Rational& l0, const Rational& v0) const {
    if (l0 == 0) throw std::domain_error("evaluation at l = 0");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
      Rational p = 1;
      Rational base = e >= 0 ? l0 : Rational(1 / l0);
      for (int k = 0; k < (e >= 0 ? e : -e); ++k) p *= base;
      acc += c.eval(v0) * p;
    }
    return acc;
  }

  // Substitute the coefficient variable; l is untouched.
  template <class OtherVar>
  Laurent<OtherVar> substitute(const RatFunc& image) const {
    std::vector<typename Laurent<OtherVar>::Term> t;
    for (const auto& [e, c] : terms_) t.emplace_back(e, c.compose(image));
    return Laurent<OtherVar>::from_terms(std::move(t));
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string cs = c.to_string(Var::name);
      bool simple = c.is_polynomial() &&
                    std::count_if(c.num().coeffs().begin(), c.num().coeffs().end(),
                                  [](const Rational& q) { return q != 0; }) == 1;
      if (!out.empty()) out += " + ";
      if (e == 0) {
        out += simple ? cs : "(" + cs + ")";
        continue;
      }
      if (c.is_one()) {
      } else if (simple && cs == "-1") {
        out += "-";
      } else {
        out += (simple ? cs : "(" + cs + ")") + "*";
      }
      out += e == 1 ? std::string("l") : "l^" + std::to_string(e);
    }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = terms_.size();
    for (const auto& [e, c] : terms_) h = (h * 131u + static_cast<std::size_t>(e)) ^ c.hash();
    return h;
  }

 private:
  std::vector<Term> terms_;
};

using Scalar = Laurent<MVar>;

namespace scalars {
inline Scalar l() { return Scalar::l(1); }
inline Scalar linv() { return Scalar::l(-1); }
inline Scalar m() { return Scalar::var(); }
}  // namespace scalars

// x = 1 - (l - l^-1)/m, from m = (l - l^-1)/(1 - x).
inline Scalar x_value() {
  using namespace scalars;
  return Scalar(1) - (l() - linv()) / m();
}

inline Rational eval_at(const Scalar& a, const Rational& l0, const Rational& m0) {
  return a.eval_at(l0, m0);
}

}  // namespace bmw
