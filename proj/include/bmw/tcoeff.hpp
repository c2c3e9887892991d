#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bmw/hecke.hpp"
#include "bmw/models.hpp"
#include "bmw/rootsys.hpp"

namespace bmw {

// The node j in C with h_{b,i} = z_j; requires (alpha_i, b) = 0.
inline Node h_beta_i(const RootSystem& rs, Root b, Node i) {
  rs.require_index(b);
  if (rs.pairing_simple(i, b) != 0)
    throw std::invalid_argument("h_beta_i needs (alpha_i, beta) = 0, got " +
                                std::to_string(rs.pairing_simple(i, b)));
  while (!(b == rs.highest_root())) {
    Node j = -1;
    for (Node k = 0; k < rs.rank(); ++k)
      if (rs.pairing_simple(k, b) == -1) {
        j = k;
        break;
      }
    if (rs.adjacent(i, j)) {
      b = b + rs.simple(j) + rs.simple(i);
      i = j;
    } else {
      b = b + rs.simple(j);
    }
  }
  if (!rs.in_c(i)) throw std::logic_error("h_beta_i left the node set C");
  return i;
}

// Signed word of d_b^{-1} s_i d_b.
inline SignedWord h_word(const RootSystem& rs, const Root& b, Node i) {
  Word d = rs.d_beta(b);
  return concat({inverse_of(d), SignedWord{{i, false}}, positive(d)});
}

// Signed word of d_{alpha_i}^{-1} s_b^{-1} s_i s_b d_b.
inline SignedWord closed_form_word(const RootSystem& rs, Node i, const Root& b) {
  Word sb = rs.s_beta_word(b);
  return concat({inverse_of(rs.d_beta(rs.simple(i))), inverse_of(sb), SignedWord{{i, false}},
                 positive(sb), positive(rs.d_beta(b))});
}

// Which recursion produced a value; used by the diagnostics.
enum class TRule { Zero, Unit, Height2, ClosedForm, Row4, Row5, Row6, Row7 };

// Memoized T_{i,b} over a coefficient model, following the recursive
// algorithm: support test, small heights, closed form when (alpha_i, b) = 1,
// otherwise the table rows.
template <class Model>
class TCoefficients {
 public:
  using V = typename Model::value_type;

  explicit TCoefficients(Model model) : model_(std::move(model)) {}

  const Model& model() const { return model_; }
  const RootSystem& roots() const { return model_.roots(); }

  V h(const Root& b, Node i) const { return model_.generator(h_beta_i(roots(), b, i)); }
  V h_inv(const Root& b, Node i) const { return h(b, i) + m(); }

  const V& t(Node i, const Root& b) const {
    const std::size_t idx = roots().require_index(b);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find({i, idx});
      if (it != cache_.end()) return it->second;
    }
    V v = compute(i, b);
    std::lock_guard<std::mutex> lock(mu_);
    // Write-once: a concurrent fill computed the same value.
    return cache_.emplace(std::make_pair(i, idx), std::move(v)).first->second;
  }

  TRule rule(Node i, const Root& b) const {
    const RootSystem& rs = roots();
    if (!b.in_support(i)) return TRule::Zero;
    if (b == rs.simple(i)) return TRule::Unit;
    if (b.height() == 2) return TRule::Height2;
    int p = rs.pairing_simple(i, b);
    if (p == 1) return Model::has_closed_form ? TRule::ClosedForm : fallback_rule(i, b);
    if (row4_node(i, b)) return TRule::Row4;
    return p == 0 ? TRule::Row5 : TRule::Row6;
  }

  // Closed form for (alpha_i, b) = 1 with height > 2.
  V closed_form(Node i, const Root& b) const {
    return m() * model_.closed_form(closed_form_word(roots(), i, b));
  }

  // Every value the recursion could produce at (i, b) by varying the admissible
  // node in the row steps (and, when (alpha_i, b) = 1, in rows 4 and 7).
  std::vector<std::pair<std::string, V>> alternatives(Node i, const Root& b) const {
    const RootSystem& rs = roots();
    std::vector<std::pair<std::string, V>> out;
    if (!b.in_support(i) || b.height() <= 2) return out;
    int p = rs.pairing_simple(i, b);
    for (Node j = 0; j < rs.rank(); ++j) {
      if (j == i) continue;
      int pj = rs.pairing_simple(j, b);
      std::string tag = std::to_string(j + 1);
      if (!rs.adjacent(i, j) && pj == 1) out.emplace_back("row4/j=" + tag, row4(i, j, b));
      if (rs.adjacent(i, j) && pj == 1 && p == 0) out.emplace_back("row5/j=" + tag, row5(i, j, b));
      if (rs.adjacent(i, j) && pj == 1 && p == -1) out.emplace_back("row6/j=" + tag, row6(i, j, b));
      if (rs.adjacent(i, j) && pj == 0 && p == 1) out.emplace_back("row7/j=" + tag, row7(i, j, b));
    }
    return out;
  }

  // Table rows as explicit right-hand sides.
  V row4(Node i, Node j, const Root& b) const {
    return h_inv(roots().simple(i), j) * t(i, b - roots().simple(j));
  }
  V row5(Node i, Node j, const Root& b) const {
    const Root& ai = roots().simple(i);
    const Root& aj = roots().simple(j);
    return t(j, b - ai - aj) + m() * t(i, b - aj);
  }
  V row6(Node i, Node j, const Root& b) const {
    const Root& aj = roots().simple(j);
    return t(j, b - aj) * h(b - aj, i) + m() * t(i, b - aj);
  }
  V row7(Node i, Node j, const Root& b) const {
    return t(j, b - roots().simple(i)) * h_inv(b, j);
  }

  std::size_t cached() const {
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.size();
  }

  // Persisted values: (i, index of b, T_{i,b}). Preloading never overwrites.
  std::vector<std::tuple<Node, std::size_t, V>> snapshot() const {
    std::lock_guard<std::mutex> lock(mu_);
    std::vector<std::tuple<Node, std::size_t, V>> out;
    for (const auto& [k, v] : cache_) out.emplace_back(k.first, k.second, v);
    return out;
  }
  void preload(Node i, std::size_t idx, V v) const {
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(std::make_pair(i, idx), std::move(v));
  }

 private:
  V m() const { return model_.from_scalar(scalars::m()); }

  std::optional<Node> row4_node(Node i, const Root& b) const {
    const RootSystem& rs = roots();
    for (Node j = 0; j < rs.rank(); ++j)
      if (j != i && !rs.adjacent(i, j) && rs.pairing_simple(j, b) == 1) return j;
    return std::nullopt;
  }
  std::optional<Node> adjacent_node(Node i, const Root& b, int pairing) const {
    const RootSystem& rs = roots();
    for (Node j = 0; j < rs.rank(); ++j)
      if (rs.adjacent(i, j) && rs.pairing_simple(j, b) == pairing) return j;
    return std::nullopt;
  }
  TRule fallback_rule(Node i, const Root& b) const {
    if (row4_node(i, b)) return TRule::Row4;
    if (adjacent_node(i, b, 0)) return TRule::Row7;
    throw std::logic_error("no table row applies at node " + std::to_string(i + 1) + ", root " +
                           b.to_string());
  }

  V compute(Node i, const Root& b) const {
    const RootSystem& rs = roots();
    switch (rule(i, b)) {
      case TRule::Zero: return model_.zero();
      case TRule::Unit: return model_.one();
      case TRule::Height2: return m();
      case TRule::ClosedForm: return closed_form(i, b);
      case TRule::Row4: return row4(i, *row4_node(i, b), b);
      case TRule::Row7: return row7(i, *adjacent_node(i, b, 0), b);
      case TRule::Row5:
      case TRule::Row6: {
        auto j = adjacent_node(i, b, 1);
        if (!j) throw std::logic_error("no admissible node for " + b.to_string());
        return rs.pairing_simple(i, b) == 0 ? row5(i, *j, b) : row6(i, *j, b);
      }
    }
    throw std::logic_error("unreachable");
  }

  Model model_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<Node, std::size_t>, V> cache_;
};

}  // namespace bmw
