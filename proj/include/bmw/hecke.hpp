#pragma once

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bmw/rootsys.hpp"
#include "bmw/scalar.hpp"

namespace bmw {

using BasisId = int;
using HeckeTerms = std::vector<std::pair<BasisId, Scalar>>;

// Iwahori-Hecke algebra of a parabolic subgroup W_J of the fixed Weyl group,
// with basis T_w and T_s^2 = 1 - m T_s. Basis elements are interned on first
// use; multiplication tables are filled lazily under a mutex.
class HeckeAlgebra {
 public:
  HeckeAlgebra(std::shared_ptr<const RootSystem> rs, std::vector<Node> nodes)
      : rs_(std::move(rs)), nodes_(std::move(nodes)), mask_(rs_->rank(), false) {
    std::sort(nodes_.begin(), nodes_.end());
    for (Node j : nodes_) mask_[j] = true;
    intern_locked(rs_->identity(), Word{});
  }

  const RootSystem& roots() const { return *rs_; }
  std::shared_ptr<const RootSystem> roots_ptr() const { return rs_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  bool has_node(Node j) const { return j >= 0 && j < rs_->rank() && mask_[j]; }

  bool contains(const WeylElement& w) const {
    return rs_->reduced_word_within(w, &mask_).has_value();
  }

  BasisId id_of(const WeylElement& w) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ids_.find(std::string(w.key()));
    if (it != ids_.end()) return it->second;
    auto word = rs_->reduced_word_within(w, &mask_);
    if (!word) throw std::invalid_argument("Weyl element outside the parabolic subgroup");
    return intern_locked(w, std::move(*word));
  }
  WeylElement element(BasisId id) const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_[id].elem;
  }
  Word word(BasisId id) const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_[id].word;
  }
  int length(BasisId id) const {
    std::lock_guard<std::mutex> lock(mu_);
    return static_cast<int>(entries_[id].word.size());
  }
  std::size_t interned() const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.size();
  }

  // Index of w*s and whether the length goes up.
  std::pair<BasisId, bool> right(BasisId id, Node s) const {
    if (!has_node(s)) throw std::invalid_argument("generator outside the parent node set");
    std::lock_guard<std::mutex> lock(mu_);
    Entry& e = entries_[id];
    if (e.right.empty()) e.right.assign(rs_->rank(), -1);
    bool up = !e.elem.has_right_descent(s);
    if (e.right[s] < 0) {
      WeylElement ws = rs_->times_simple(e.elem, s);
      auto it = ids_.find(std::string(ws.key()));
      BasisId nid;
      if (it != ids_.end()) {
        nid = it->second;
      } else {
        Word w = entries_[id].word;
        if (up) {
          w.push_back(s);
        } else {
          auto rw = rs_->reduced_word_within(ws, &mask_);
          w = std::move(*rw);
        }
        nid = intern_locked(ws, std::move(w));
      }
      entries_[id].right[s] = nid;  // entries_ is a deque: references stay valid
    }
    return {entries_[id].right[s], up};
  }

  // T_u * T_w, memoized.
  HeckeTerms basis_product(BasisId u, BasisId w) const {
    const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(w);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = products_.find(key);
      if (it != products_.end()) return it->second;
    }
    HeckeTerms acc{{u, Scalar(1)}};
    for (Node s : word(w)) acc = right_generator(acc, s, false);
    std::lock_guard<std::mutex> lock(mu_);
    products_.emplace(key, acc);
    return acc;
  }

  // terms * T_s, or terms * (T_s + m) when inverse is set.
  HeckeTerms right_generator(const HeckeTerms& terms, Node s, bool inverse) const {
    std::unordered_map<BasisId, Scalar> acc;
    const Scalar m = scalars::m();
    for (const auto& [id, c] : terms) {
      auto [nid, up] = right(id, s);
      acc[nid] += c;
      if (!up) acc[id] -= m * c;
      if (inverse) acc[id] += m * c;
    }
    return normalize(std::move(acc));
  }

  static HeckeTerms normalize(std::unordered_map<BasisId, Scalar>&& acc) {
    HeckeTerms t;
    t.reserve(acc.size());
    for (auto& [id, c] : acc)
      if (!c.is_zero()) t.emplace_back(id, std::move(c));
    std::sort(t.begin(), t.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return t;
  }

 private:
  struct Entry {
    WeylElement elem;
    Word word;
    std::vector<BasisId> right;
  };

  BasisId intern_locked(const WeylElement& w, Word word) const {
    BasisId id = static_cast<BasisId>(entries_.size());
    entries_.push_back(Entry{w, std::move(word), {}});
    ids_.emplace(std::string(w.key()), id);
    return id;
  }

  std::shared_ptr<const RootSystem> rs_;
  std::vector<Node> nodes_;
  std::vector<bool> mask_;
  mutable std::mutex mu_;
  mutable std::deque<Entry> entries_;
  mutable std::unordered_map<std::string, BasisId> ids_;
  mutable std::unordered_map<std::uint64_t, HeckeTerms> products_;
};

using HeckeAlgebraPtr = std::shared_ptr<const HeckeAlgebra>;

class HeckeElement {
 public:
  HeckeElement() = default;
  explicit HeckeElement(HeckeAlgebraPtr alg) : alg_(std::move(alg)) {}
  HeckeElement(HeckeAlgebraPtr alg, HeckeTerms terms) : alg_(std::move(alg)), terms_(std::move(terms)) {}

  static HeckeElement unit(HeckeAlgebraPtr alg, Scalar c = Scalar(1)) {
    HeckeElement e(std::move(alg));
    if (!c.is_zero()) e.terms_.emplace_back(0, std::move(c));
    return e;
  }
  static HeckeElement basis(HeckeAlgebraPtr alg, const WeylElement& w) {
    BasisId id = alg->id_of(w);
    return HeckeElement(std::move(alg), HeckeTerms{{id, Scalar(1)}});
  }
  static HeckeElement generator(HeckeAlgebraPtr alg, Node j) {
    if (!alg->has_node(j)) throw std::invalid_argument("generator outside the parent node set");
    return basis(alg, alg->roots().word_element({j}));
  }

  const HeckeAlgebraPtr& algebra() const { return alg_; }
  const HeckeTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_l_free() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.is_l_free(); });
  }
  Scalar coeff_of(const WeylElement& w) const {
    if (!alg_) return {};
    BasisId id = alg_->id_of(w);
    for (const auto& [k, c] : terms_)
      if (k == id) return c;
    return {};
  }

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    check_same(a, b);
    return a.terms_ == b.terms_;
  }

  friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
    if (a.is_zero()) return b.adopt(a.alg_);
    if (b.is_zero()) return a;
    check_same(a, b);
    HeckeTerms t;
    t.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
        t.push_back(*i++);
      } else if (i == a.terms_.end() || j->first < i->first) {
        t.push_back(*j++);
      } else {
        Scalar c = i->second + j->second;
        if (!c.is_zero()) t.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    return HeckeElement(a.alg_, std::move(t));
  }
  friend HeckeElement operator-(const HeckeElement& a) { return Scalar(-1) * a; }
  friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) { return a + (-b); }
  friend HeckeElement operator*(const Scalar& s, const HeckeElement& a) {
    if (s.is_zero()) return HeckeElement(a.alg_);
    HeckeTerms t;
    t.reserve(a.terms_.size());
    for (const auto& [id, c] : a.terms_) {
      Scalar p = s * c;
      if (!p.is_zero()) t.emplace_back(id, std::move(p));
    }
    return HeckeElement(a.alg_, std::move(t));
  }
  friend HeckeElement operator*(const HeckeElement& a, const Scalar& s) { return s * a; }
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
    if (a.is_zero() || b.is_zero()) return HeckeElement(a.alg_ ? a.alg_ : b.alg_);
    check_same(a, b);
    if (a.terms_.size() == 1 && a.terms_[0].first == 0) return a.terms_[0].second * b;
    if (b.terms_.size() == 1 && b.terms_[0].first == 0) return a * b.terms_[0].second;
    std::unordered_map<BasisId, Scalar> acc;
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [w, cw] : b.terms_) {
        Scalar c = cu * cw;
        for (const auto& [v, cv] : a.alg_->basis_product(u, w)) acc[v] += c * cv;
      }
    return HeckeElement(a.alg_, HeckeAlgebra::normalize(std::move(acc)));
  }
  HeckeElement& operator+=(const HeckeElement& b) { return *this = *this + b; }
  HeckeElement& operator-=(const HeckeElement& b) { return *this = *this - b; }
  HeckeElement& operator*=(const HeckeElement& b) { return *this = *this * b; }

  // Right multiplication by z_s, or by z_s^{-1} = z_s + m.
  HeckeElement times_generator(Node s, bool inverse = false) const {
    return HeckeElement(alg_, alg_->right_generator(terms_, s, inverse));
  }

  // Terms sorted by (length, reduced word) for stable output; words 0-based.
  std::vector<std::pair<Word, Scalar>> sorted_terms() const {
    std::vector<std::pair<Word, Scalar>> out;
    for (const auto& [id, c] : terms_) out.emplace_back(alg_->word(id), c);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
      return a.first < b.first;
    });
    return out;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& [w, c] : sorted_terms()) {
      if (!s.empty()) s += " + ";
      std::string cs = c.to_string();
      bool wrap = cs.find(' ') != std::string::npos;
      if (w.empty()) {
        s += cs;
        continue;
      }
      if (!c.is_one()) s += (wrap ? "(" + cs + ")" : cs) + "*";
      s += "T[";
      for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k] + 1);
      s += "]";
    }
    return s;
  }

 private:
  HeckeElement adopt(const HeckeAlgebraPtr& alg) const {
    if (alg_ || !alg) return *this;
    return HeckeElement(alg, terms_);
  }
  static void check_same(const HeckeElement& a, const HeckeElement& b) {
    if (a.alg_ != b.alg_) throw std::invalid_argument("Hecke elements have different parents");
  }

  HeckeAlgebraPtr alg_;
  HeckeTerms terms_;
};

inline HeckeAlgebraPtr make_hecke(std::shared_ptr<const RootSystem> rs, std::vector<Node> nodes) {
  return std::make_shared<const HeckeAlgebra>(std::move(rs), std::move(nodes));
}
inline HeckeAlgebraPtr make_full_hecke(std::shared_ptr<const RootSystem> rs) {
  std::vector<Node> all(rs->rank());
  for (Node j = 0; j < rs->rank(); ++j) all[j] = j;
  return make_hecke(std::move(rs), std::move(all));
}

struct SignedLetter {
  Node node;
  bool inverse;
};
using SignedWord = std::vector<SignedLetter>;

inline SignedWord positive(const Word& w) {
  SignedWord r;
  for (Node j : w) r.push_back({j, false});
  return r;
}
// Inverse of the positive lift of w: reversed, every letter inverted.
inline SignedWord inverse_of(const Word& w) {
  SignedWord r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({*it, true});
  return r;
}
inline SignedWord concat(std::initializer_list<SignedWord> parts) {
  SignedWord r;
  for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
  return r;
}

// Left-to-right product; (j,+) -> z_j, (j,-) -> z_j + m.
inline HeckeElement eval_signed_word(const HeckeAlgebraPtr& alg, const SignedWord& w) {
  HeckeElement e = HeckeElement::unit(alg);
  for (const auto& [j, inv] : w) e = e.times_generator(j, inv);
  return e;
}

// Re-parent onto a sub-parabolic; throws if some basis element lies outside.
inline HeckeElement project_subalgebra(const HeckeElement& a, const HeckeAlgebraPtr& target) {
  HeckeTerms t;
  for (const auto& [id, c] : a.terms()) {
    WeylElement w = a.algebra()->element(id);
    if (!target->contains(w)) {
      Word word = a.algebra()->word(id);
      std::string ws;
      for (Node j : word) ws += (ws.empty() ? "" : ",") + std::to_string(j + 1);
      throw std::domain_error("projection failed: basis element T[" + ws +
                              "] lies outside the target parabolic");
    }
    t.emplace_back(target->id_of(w), c);
  }
  std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return HeckeElement(target, std::move(t));
}

}  // namespace bmw
