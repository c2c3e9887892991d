#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bmw/poly.hpp"

namespace bmw {

inline bool value_is_zero(const Rational& v) { return v == 0; }
template <class V>
bool value_is_zero(const V& v) {
  return v.is_zero();
}

// Square matrix stored by columns; column b holds the nonzero entries
// (row g, entry[g][b]) sorted by row. For a right module the operator sends
// x_b to sum_g x_g * entry[g][b], so composition is the ordinary product with
// entry factors kept in left-to-right order.
template <class V>
class RepMatrix {
 public:
  using Column = std::vector<std::pair<int, V>>;

  RepMatrix() = default;
  explicit RepMatrix(int n) : cols_(n) {}

  static RepMatrix identity(int n, const V& one) {
    RepMatrix r(n);
    for (int k = 0; k < n; ++k) r.cols_[k].emplace_back(k, one);
    return r;
  }

  int size() const { return static_cast<int>(cols_.size()); }
  const Column& column(int c) const { return cols_[c]; }

  std::optional<V> entry(int r, int c) const {
    for (const auto& [row, v] : cols_[c])
      if (row == r) return v;
    return std::nullopt;
  }

  // Adds v into entry[r][c].
  void add(int r, int c, const V& v) {
    if (value_is_zero(v)) return;
    auto& col = cols_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, int row) { return e.first < row; });
    if (it != col.end() && it->first == r) {
      it->second = it->second + v;
      if (value_is_zero(it->second)) col.erase(it);
    } else {
      col.insert(it, {r, v});
    }
  }

  bool is_zero() const {
    return std::all_of(cols_.begin(), cols_.end(), [](const Column& c) { return c.empty(); });
  }
  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
  }

  friend bool operator==(const RepMatrix& a, const RepMatrix& b) { return (a - b).is_zero(); }

  friend RepMatrix operator+(const RepMatrix& a, const RepMatrix& b) {
    check(a, b);
    RepMatrix r(a.size());
    for (int c = 0; c < a.size(); ++c) {
      auto i = a.cols_[c].begin(), j = b.cols_[c].begin();
      auto ie = a.cols_[c].end(), je = b.cols_[c].end();
      auto& out = r.cols_[c];
      while (i != ie || j != je) {
        if (j == je || (i != ie && i->first < j->first)) {
          out.push_back(*i++);
        } else if (i == ie || j->first < i->first) {
          out.push_back(*j++);
        } else {
          V s = i->second + j->second;
          if (!value_is_zero(s)) out.emplace_back(i->first, std::move(s));
          ++i;
          ++j;
        }
      }
    }
    return r;
  }
  friend RepMatrix operator-(const RepMatrix& a) {
    RepMatrix r = a;
    for (auto& col : r.cols_)
      for (auto& e : col) e.second = -e.second;
    return r;
  }
  friend RepMatrix operator-(const RepMatrix& a, const RepMatrix& b) { return a + (-b); }

  friend RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
    check(a, b);
    const int n = a.size();
    RepMatrix r(n);
    std::vector<std::optional<V>> acc(n);
    std::vector<int> touched;
    for (int c = 0; c < n; ++c) {
      touched.clear();
      for (const auto& [g, bv] : b.cols_[c])
        for (const auto& [d, av] : a.cols_[g]) {
          V p = av * bv;
          if (!acc[d]) {
            acc[d] = std::move(p);
            touched.push_back(d);
          } else {
            *acc[d] = *acc[d] + p;
          }
        }
      std::sort(touched.begin(), touched.end());
      for (int d : touched) {
        if (!value_is_zero(*acc[d])) r.cols_[c].emplace_back(d, std::move(*acc[d]));
        acc[d].reset();
      }
    }
    return r;
  }

  // Entrywise left and right multiplication by a ring element.
  friend RepMatrix operator*(const V& s, const RepMatrix& a) {
    return a.map([&](const V& v) -> V { return s * v; });
  }
  friend RepMatrix operator*(const RepMatrix& a, const V& s) {
    return a.map([&](const V& v) -> V { return v * s; });
  }

  RepMatrix& operator+=(const RepMatrix& b) { return *this = *this + b; }
  RepMatrix& operator-=(const RepMatrix& b) { return *this = *this - b; }
  RepMatrix& operator*=(const RepMatrix& b) { return *this = *this * b; }

  template <class F>
  auto map(F&& f) const {
    using W = std::decay_t<decltype(f(std::declval<const V&>()))>;
    RepMatrix<W> r(size());
    for (int c = 0; c < size(); ++c)
      for (const auto& [row, v] : cols_[c]) r.add(row, c, f(v));
    return r;
  }

  // The operator applied to a single vector sum_b x_b v_b (sorted by b).
  Column apply(const Column& x) const {
    std::map<int, V> acc;
    for (const auto& [g, xv] : x)
      for (const auto& [d, av] : cols_[g]) {
        V p = av * xv;
        auto [it, fresh] = acc.emplace(d, p);
        if (!fresh) it->second = it->second + p;
      }
    Column out;
    for (auto& [d, v] : acc)
      if (!value_is_zero(v)) out.emplace_back(d, std::move(v));
    return out;
  }

  // First nonzero cell as (row, column), for witnesses.
  std::optional<std::pair<int, int>> first_nonzero() const {
    for (int c = 0; c < size(); ++c)
      if (!cols_[c].empty()) return std::make_pair(cols_[c].front().first, c);
    return std::nullopt;
  }

 private:
  static void check(const RepMatrix& a, const RepMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
  }

  std::vector<Column> cols_;
};

}  // namespace bmw
