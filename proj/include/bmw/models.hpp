#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bmw/hecke.hpp"
#include "bmw/rootsys.hpp"
#include "bmw/scalar.hpp"

namespace bmw {

// A coefficient model says where the T_{i,b} live: the generic Hecke algebra
// Z0, a rational point of a linear character, or a matrix representation of Z0.
// Required members:
//   value_type, zero(), one(), from_scalar(Scalar), generator(j in C),
//   is_zero(v), has_closed_form, closed_form(SignedWord) (when available).

using ThetaScalar = Laurent<RVar>;

// The substitution m = r - 1/r.
inline RatFunc m_in_r() { return RatFunc(Poly{-1, 0, 1}, Poly::var()); }
inline ThetaScalar to_theta(const Scalar& s) { return s.substitute<RVar>(m_in_r()); }

template <class T>
class SmallMatrix {
 public:
  SmallMatrix() = default;
  explicit SmallMatrix(int dim) : d_(dim), a_(static_cast<std::size_t>(dim) * dim) {}
  static SmallMatrix scalar(int dim, const T& c) {
    SmallMatrix m(dim);
    for (int k = 0; k < dim; ++k) m(k, k) = c;
    return m;
  }

  int dim() const { return d_; }
  T& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * d_ + c]; }
  const T& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * d_ + c]; }
  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const SmallMatrix& a, const SmallMatrix& b) {
    if (a.d_ == 0 || b.d_ == 0) return a.is_zero() && b.is_zero();
    return a.d_ == b.d_ && a.a_ == b.a_;
  }
  friend SmallMatrix operator+(const SmallMatrix& a, const SmallMatrix& b) {
    if (a.d_ == 0) return b;
    if (b.d_ == 0) return a;
    SmallMatrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
    return r;
  }
  friend SmallMatrix operator-(const SmallMatrix& a) {
    SmallMatrix r = a;
    for (auto& x : r.a_) x = -x;
    return r;
  }
  friend SmallMatrix operator-(const SmallMatrix& a, const SmallMatrix& b) { return a + (-b); }
  friend SmallMatrix operator*(const SmallMatrix& a, const SmallMatrix& b) {
    if (a.d_ == 0 || b.d_ == 0) return {};
    SmallMatrix r(a.d_);
    for (int i = 0; i < a.d_; ++i)
      for (int k = 0; k < a.d_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (int j = 0; j < a.d_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }
  SmallMatrix& operator+=(const SmallMatrix& b) { return *this = *this + b; }

 private:
  int d_ = 0;
  std::vector<T> a_;
};

using ThetaMatrix = SmallMatrix<ThetaScalar>;

// A representation of Z0 given by images of its generators z_j (j in C).
struct ThetaSpec {
  int dim = 1;
  std::map<Node, ThetaMatrix> images;

  // Throws if an image breaks the quadratic, commutation or braid relation.
  void validate(const RootSystem& rs) const {
    const ThetaMatrix one = ThetaMatrix::scalar(dim, ThetaScalar(1));
    const ThetaMatrix m = ThetaMatrix::scalar(dim, to_theta(scalars::m()));
    for (Node j : rs.c_nodes()) {
      auto it = images.find(j);
      if (it == images.end() || it->second.dim() != dim)
        throw std::invalid_argument("theta: missing or mis-sized image for node " +
                                    std::to_string(j + 1));
      const ThetaMatrix& z = it->second;
      if (!(z * z + m * z - one).is_zero())
        throw std::invalid_argument("theta: quadratic relation fails at node " +
                                    std::to_string(j + 1));
    }
    for (Node a : rs.c_nodes())
      for (Node b : rs.c_nodes()) {
        if (a >= b) continue;
        const ThetaMatrix& za = images.at(a);
        const ThetaMatrix& zb = images.at(b);
        bool ok = rs.adjacent(a, b) ? za * zb * za == zb * za * zb : za * zb == zb * za;
        if (!ok)
          throw std::invalid_argument("theta: braid relation fails for nodes " +
                                      std::to_string(a + 1) + "," + std::to_string(b + 1));
      }
  }
};

// The linear character z_j -> r^{-1} (or the other root, -r).
inline ThetaSpec classical_lk(const RootSystem& rs, bool other_root = false) {
  ThetaSpec t;
  t.dim = 1;
  ThetaScalar r = ThetaScalar::var();
  ThetaScalar v = other_root ? -r : ThetaScalar(RatFunc(Poly(Rational(1)), Poly::var()));
  for (Node j : rs.c_nodes()) t.images[j] = ThetaMatrix::scalar(1, v);
  t.validate(rs);
  return t;
}

// ---- generic model: coefficients in Z0 ----
class HeckeModel {
 public:
  using value_type = HeckeElement;
  static constexpr bool has_closed_form = true;

  explicit HeckeModel(std::shared_ptr<const RootSystem> rs)
      : rs_(rs), z0_(make_hecke(rs, rs->c_nodes())), full_(make_full_hecke(rs)) {}

  const RootSystem& roots() const { return *rs_; }
  const HeckeAlgebraPtr& z0() const { return z0_; }
  const HeckeAlgebraPtr& full() const { return full_; }
  std::string name() const { return "generic"; }

  value_type zero() const { return HeckeElement(z0_); }
  value_type one() const { return HeckeElement::unit(z0_); }
  value_type from_scalar(const Scalar& s) const { return HeckeElement::unit(z0_, s); }
  value_type generator(Node j) const { return HeckeElement::generator(z0_, j); }
  static bool is_zero(const value_type& v) { return v.is_zero(); }

  // Evaluate in the full Hecke algebra and project back to Z0.
  value_type closed_form(const SignedWord& w) const {
    return project_subalgebra(eval_signed_word(full_, w), z0_);
  }

 private:
  std::shared_ptr<const RootSystem> rs_;
  HeckeAlgebraPtr z0_;
  HeckeAlgebraPtr full_;
};

// ---- a rational point: l = l0, r = r0, m = r0 - 1/r0, z_j -> v ----
class PointModel {
 public:
  using value_type = Rational;
  static constexpr bool has_closed_form = true;

  PointModel(std::shared_ptr<const RootSystem> rs, Rational l0, Rational r0, bool other_root = false)
      : rs_(std::move(rs)), l0_(std::move(l0)), r0_(std::move(r0)) {
    if (l0_ == 0 || r0_ == 0) throw std::invalid_argument("specialization needs l, r nonzero");
    m0_ = r0_ - 1 / r0_;
    if (m0_ == 0) throw std::invalid_argument("specialization needs m = r - 1/r nonzero");
    v_ = other_root ? Rational(-r0_) : Rational(1 / r0_);
  }

  const RootSystem& roots() const { return *rs_; }
  const Rational& l0() const { return l0_; }
  const Rational& r0() const { return r0_; }
  const Rational& m0() const { return m0_; }
  std::string name() const {
    return "specialized(l=" + l0_.get_str() + ",r=" + r0_.get_str() + ")";
  }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_scalar(const Scalar& s) const { return s.eval_at(l0_, m0_); }
  value_type generator(Node) const { return v_; }
  static bool is_zero(const value_type& v) { return v == 0; }

  // The character of the full Hecke algebra with every T_s -> v restricts to
  // the chosen character of Z0, so words landing in Z0 evaluate directly.
  value_type closed_form(const SignedWord& w) const {
    Rational acc = 1;
    const Rational vinv = v_ + m0_;
    for (const auto& l : w) acc *= l.inverse ? vinv : v_;
    return acc;
  }

 private:
  std::shared_ptr<const RootSystem> rs_;
  Rational l0_, r0_, m0_, v_;
};

// ---- a matrix representation theta of Z0 over Q(r)[l, l^-1] ----
class ThetaModel {
 public:
  using value_type = ThetaMatrix;
  static constexpr bool has_closed_form = false;

  ThetaModel(std::shared_ptr<const RootSystem> rs, ThetaSpec theta)
      : rs_(std::move(rs)), theta_(std::move(theta)) {
    theta_.validate(*rs_);
  }

  const RootSystem& roots() const { return *rs_; }
  const ThetaSpec& theta() const { return theta_; }
  std::string name() const { return "theta(dim=" + std::to_string(theta_.dim) + ")"; }

  value_type zero() const { return ThetaMatrix(theta_.dim); }
  value_type one() const { return ThetaMatrix::scalar(theta_.dim, ThetaScalar(1)); }
  value_type from_scalar(const Scalar& s) const {
    return ThetaMatrix::scalar(theta_.dim, to_theta(s));
  }
  value_type generator(Node j) const { return theta_.images.at(j); }
  static bool is_zero(const value_type& v) { return v.is_zero(); }
  value_type closed_form(const SignedWord&) const {
    throw std::logic_error("theta model has no closed form");
  }

  // theta applied to an element of Z0.
  value_type apply(const HeckeElement& h) const {
    value_type acc = zero();
    for (const auto& [word, c] : h.sorted_terms()) {
      value_type t = from_scalar(c);
      for (Node j : word) t = t * generator(j);
      acc += t;
    }
    return acc;
  }

 private:
  std::shared_ptr<const RootSystem> rs_;
  ThetaSpec theta_;
};

}  // namespace bmw
