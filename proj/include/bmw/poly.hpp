#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bmw {

using Rational = mpq_class;

inline Rational make_rational(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// Always "p/q", including "/1", so the text form is unambiguous.
inline std::string rational_to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
    throw std::invalid_argument("bad rational: '" + s + "'");
  r.canonicalize();
  return r;
}

// Dense univariate polynomial over Q, ascending degree, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational c) {
    if (c != 0) c_.push_back(std::move(c));
  }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) c_.emplace_back(c);
    trim();
  }

  static Poly var() { return Poly{0, 1}; }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& lead() const { return c_.back(); }
  Rational coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
  }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const Poly&, const Poly&) = default;

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Rational& s, const Poly& a) {
    if (s == 0) return {};
    Poly r = a;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  // Euclidean division; b must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> q(a.c_.size() - b.c_.size() + 1);
    std::vector<Rational> r = a.c_;
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
      Rational f = r[k + b.degree()] / b.lead();
      q[k] = f;
      if (f == 0) continue;
      for (int j = 0; j <= b.degree(); ++j) r[k + j] -= f * b.c_[j];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
  }

  Poly monic() const {
    if (is_zero()) return {};
    return Rational(1 / lead()) * *this;
  }

  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  std::string to_string(const std::string& v) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Rational& c = c_[k];
      if (c == 0) continue;
      bool neg = c < 0;
      Rational a = neg ? Rational(-c) : c;
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      bool unit = a == 1;
      if (k == 0 || !unit) out += a.get_str();
      if (k > 0) {
        if (!unit) out += "*";
        out += v;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = c_.size();
    for (const auto& x : c_)
      h = h * 1000003u ^ std::hash<std::string>{}(x.get_str());
    return h;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// Reduced quotient num/den with monic den; zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  explicit RatFunc(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
  explicit RatFunc(Poly p) : num_(std::move(p)), den_(Rational(1)) {}
  RatFunc(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  static RatFunc var() { return RatFunc(Poly::var()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_);
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  RatFunc inverse() const {
    if (is_zero()) throw std::domain_error("division by zero rational function");
    return RatFunc(den_, num_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  Rational eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw std::domain_error("denominator vanishes at evaluation point");
    return num_.eval(x) / d;
  }

  // Substitute the variable by another rational function (Horner).
  RatFunc compose(const RatFunc& x) const {
    auto horner = [&](const Poly& p) {
      RatFunc acc;
      const auto& c = p.coeffs();
      for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + RatFunc(*it);
      return acc;
    };
    return horner(num_) / horner(den_);
  }

  std::string to_string(const std::string& v) const {
    if (den_.is_one()) return num_.to_string(v);
    return "(" + num_.to_string(v) + ")/(" + den_.to_string(v) + ")";
  }

  std::size_t hash() const { return num_.hash() * 31u ^ den_.hash(); }

 private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(Rational(1));
      return;
    }
    if (den_.degree() > 0) {
      Poly g = Poly::gcd(num_, den_);
      if (!g.is_one()) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
      }
    }
    Rational lc = den_.lead();
    if (lc != 1) {
      Rational inv = 1 / lc;
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  Poly num_;
  Poly den_;
};

}  // namespace bmw
