#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "bmw/models.hpp"
#include "bmw/repmatrix.hpp"
#include "bmw/tcoeff.hpp"

namespace bmw {

// The generalized Lawrence-Krammer representation on the free right module
// with basis x_b (b positive), coefficients in the model. Index of x_b is the
// position of b in the ordered root list.
template <class Model>
class LKRepresentation {
 public:
  using V = typename Model::value_type;
  using Matrix = RepMatrix<V>;

  explicit LKRepresentation(Model model) : t_(std::move(model)) {}

  const Model& model() const { return t_.model(); }
  const RootSystem& roots() const { return t_.roots(); }
  const TCoefficients<Model>& tcoeffs() const { return t_; }
  int dim() const { return static_cast<int>(roots().num_positive()); }

  V scalar(const Scalar& s) const { return model().from_scalar(s); }
  Matrix identity() const { return Matrix::identity(dim(), model().one()); }
  Matrix scaled_identity(const Scalar& s) const { return Matrix::identity(dim(), scalar(s)); }

  // l^0 part of sigma_i.
  const Matrix& tau(Node i) const { return cached(tau_, i, [&] { return build(i, true, false); }); }
  // l^{-1} part: x_b -> x_{alpha_i} T_{i,b}.
  const Matrix& tpart(Node i) const { return cached(tp_, i, [&] { return build(i, false, true); }); }
  const Matrix& sigma(Node i) const { return cached(sigma_, i, [&] { return build(i, true, true); }); }

  // f_i = sigma_i^2 + m sigma_i - 1.
  const Matrix& f(Node i) const {
    return cached(f_, i, [&] {
      const Matrix& s = sigma(i);
      return s * s + scalar(scalars::m()) * s - identity();
    });
  }
  // e_i = (l/m) f_i.
  const Matrix& e(Node i) const {
    return cached(e_, i, [&] { return scalar(scalars::l() / scalars::m()) * f(i); });
  }
  // sigma_i^{-1} = sigma_i + m(1 - e_i).
  const Matrix& sigma_inv(Node i) const {
    return cached(sinv_, i, [&] {
      return sigma(i) + scalar(scalars::m()) * (identity() - e(i));
    });
  }

  // Product over a positive word, leftmost letter outermost.
  Matrix word_image(const Word& w) const {
    Matrix r = identity();
    for (Node j : w) r = r * sigma(j);
    return r;
  }

  // sigma(w_ik-hat): along the geodesic i = p0 ~ p1 ~ ... ~ pq = k the
  // operator (s_{p(q-1)} s_{pq}) ... (s_{p0} s_{p1}), sending x_{alpha_i} to x_{alpha_k}.
  Matrix path_operator(Node i, Node k) const {
    std::vector<Node> p = roots().path(i, k);
    Matrix r = identity();
    for (std::size_t t = 0; t + 1 < p.size(); ++t) r = sigma(p[t]) * sigma(p[t + 1]) * r;
    return r;
  }

  int index(const Root& b) const { return static_cast<int>(roots().require_index(b)); }

 private:
  template <class F>
  const Matrix& cached(std::map<Node, Matrix>& store, Node i, F&& make) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = store.find(i);
      if (it != store.end()) return it->second;
    }
    Matrix m = make();
    std::lock_guard<std::mutex> lock(mu_);
    return store.emplace(i, std::move(m)).first->second;
  }

  Matrix build(Node i, bool with_tau, bool with_t) const {
    const RootSystem& rs = roots();
    Matrix s(dim());
    const Root ai = rs.simple(i);
    const int row_i = index(ai);
    const V linv = scalar(scalars::linv());
    for (int c = 0; c < dim(); ++c) {
      const Root& b = rs.positive_roots()[c];
      if (with_tau) {
        switch (rs.pairing_simple(i, b)) {
          case 1: s.add(index(b - ai), c, model().one()); break;
          case 0: s.add(c, c, t_.h(b, i)); break;
          case -1:
            s.add(index(b + ai), c, model().one());
            s.add(c, c, scalar(-scalars::m()));
            break;
          default: break;
        }
      }
      if (with_t) s.add(row_i, c, linv * t_.t(i, b));
    }
    return s;
  }

  TCoefficients<Model> t_;
  mutable std::mutex mu_;
  mutable std::map<Node, Matrix> tau_, tp_, sigma_, f_, e_, sinv_;
};

// Build-then-specialize: push every entry of the generic sigma_i through theta.
inline std::vector<RepMatrix<ThetaMatrix>> gamma_theta(const LKRepresentation<HeckeModel>& generic,
                                                       const ThetaModel& theta) {
  std::vector<RepMatrix<ThetaMatrix>> out;
  for (Node i = 0; i < generic.roots().rank(); ++i)
    out.push_back(generic.sigma(i).map([&](const HeckeElement& h) { return theta.apply(h); }));
  return out;
}

// Expand block entries into a dense (|Phi+| dim theta)-square matrix.
inline std::vector<std::vector<ThetaScalar>> flatten(const RepMatrix<ThetaMatrix>& m, int d) {
  const int n = m.size();
  std::vector<std::vector<ThetaScalar>> a(n * d, std::vector<ThetaScalar>(n * d));
  for (int c = 0; c < n; ++c)
    for (const auto& [r, blk] : m.column(c))
      for (int u = 0; u < d; ++u)
        for (int v = 0; v < d; ++v) a[r * d + u][c * d + v] = blk(u, v);
  return a;
}

}  // namespace bmw
