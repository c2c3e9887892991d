#pragma once

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bmw/hecke.hpp"
#include "bmw/lkrep.hpp"
#include "bmw/rootsys.hpp"
#include "bmw/scalar.hpp"

namespace bmw {

enum class Kind : std::uint8_t { g = 0, g_inv = 1, e = 2 };

struct Letter {
  Node node;
  Kind kind;
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using BmwWord = std::vector<Letter>;

inline std::string to_string(const BmwWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& [n, k] : w) {
    if (!s.empty()) s += ' ';
    s += k == Kind::g ? 'g' : k == Kind::g_inv ? 'G' : 'e';
    s += std::to_string(n + 1);
  }
  return s;
}

struct BmwWordHash {
  std::size_t operator()(const BmwWord& w) const {
    std::size_t h = w.size();
    for (const auto& [n, k] : w) h = h * 1000003u + static_cast<std::size_t>(n * 3 + int(k));
    return h;
  }
};

// Shortlex: shorter words first, then letter by letter.
struct ShortLex {
  bool operator()(const BmwWord& a, const BmwWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class WordParseError : public std::invalid_argument {
 public:
  WordParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Tokens g<i>, G<i>, e<i> separated by whitespace; nodes are 1-based.
inline BmwWord parse_word(const std::string& text, int rank) {
  BmwWord w;
  std::size_t p = 0;
  while (p < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[p]))) {
      ++p;
      continue;
    }
    const std::size_t start = p;
    Kind k;
    switch (text[p]) {
      case 'g': k = Kind::g; break;
      case 'G': k = Kind::g_inv; break;
      case 'e': k = Kind::e; break;
      default: throw WordParseError("bad token '" + std::string(1, text[p]) + "'", start);
    }
    ++p;
    std::size_t d = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (d == p || p - d > 3) throw WordParseError("bad token: expected a node number", start);
    if (p < text.size() && !std::isspace(static_cast<unsigned char>(text[p])))
      throw WordParseError("bad token: junk after node number", start);
    int n = std::stoi(text.substr(d, p - d));
    if (n < 1 || n > rank)
      throw WordParseError("bad node " + std::to_string(n) + " (rank " + std::to_string(rank) + ")",
                           start);
    w.push_back({n - 1, k});
  }
  return w;
}

// Linear combination of words with nonzero Scalar coefficients, in shortlex order.
class WordCombination {
 public:
  using Map = std::map<BmwWord, Scalar, ShortLex>;

  WordCombination() = default;
  explicit WordCombination(const BmwWord& w, Scalar c = Scalar(1)) { add(w, c); }

  const Map& terms() const& { return t_; }
  Map terms() && { return std::move(t_); }
  bool is_zero() const { return t_.empty(); }
  std::size_t max_length() const { return t_.empty() ? 0 : t_.rbegin()->first.size(); }

  void add(const BmwWord& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
  void add(const WordCombination& o, const Scalar& c = Scalar(1)) {
    for (const auto& [w, v] : o.t_) add(w, c * v);
  }

  friend bool operator==(const WordCombination&, const WordCombination&) = default;

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : t_) {
      if (!s.empty()) s += " + ";
      std::string cs = c.to_string();
      if (w.empty()) {
        s += cs;
      } else if (c.is_one()) {
        s += bmw::to_string(w);
      } else {
        s += (cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs) + "*" + bmw::to_string(w);
      }
    }
    return s;
  }

 private:
  Map t_;
};

// Rewrites words in g, g^{-1}, e towards length at most |Phi+|. Inverses go
// first via g^{-1} = g + m - m e; then length-reducing rules fire, with a
// breadth-first search over commutations, g g g braid moves and the
// g e g <-> g e g move (which spawns shorter correction terms) to expose them.
// Results are memoized per word; the cache is write-once.
class WordReducer {
 public:
  explicit WordReducer(std::shared_ptr<const RootSystem> rs, std::size_t orbit_cap = 1u << 20)
      : rs_(std::move(rs)), cap_(orbit_cap) {}

  const RootSystem& roots() const { return *rs_; }

  WordCombination reduce(const BmwWord& w) const {
    for (const auto& [n, k] : w)
      if (n < 0 || n >= rs_->rank()) throw std::invalid_argument("word letter outside the diagram");
    WordCombination out;
    const WordCombination expanded = expand_inverses(w);
    for (const auto& [v, c] : expanded.terms()) out.add(reduce_positive(v), c);
    return out;
  }
  WordCombination reduce(const WordCombination& x) const {
    WordCombination out;
    for (const auto& [v, c] : x.terms()) out.add(reduce(v), c);
    return out;
  }

  std::size_t cached() const {
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.size();
  }

 private:
  static Letter G(Node n) { return {n, Kind::g}; }
  static Letter E(Node n) { return {n, Kind::e}; }

  static WordCombination expand_inverses(const BmwWord& w) {
    using namespace scalars;
    WordCombination acc(BmwWord{});
    for (const auto& l : w) {
      WordCombination next;
      for (const auto& [v, c] : acc.terms()) {
        BmwWord a = v;
        if (l.kind != Kind::g_inv) {
          a.push_back(l);
          next.add(a, c);
          continue;
        }
        next.add(v, c * m());
        a.push_back(G(l.node));
        next.add(a, c);
        a.back() = E(l.node);
        next.add(a, -c * m());
      }
      acc = std::move(next);
    }
    return acc;
  }

  // Replacement for a length-reducing pattern starting at p, if any.
  std::optional<std::pair<std::size_t, WordCombination>> redex(const BmwWord& w, std::size_t p) const {
    using namespace scalars;
    const Letter a = w[p];
    if (p + 1 < w.size() && w[p + 1].node == a.node) {
      const Letter b = w[p + 1];
      const Node i = a.node;
      WordCombination r;
      if (a.kind == Kind::g && b.kind == Kind::g) {
        r.add(BmwWord{}, Scalar(1));
        r.add(BmwWord{G(i)}, -m());
        r.add(BmwWord{E(i)}, m() * linv());
      } else if (a.kind == Kind::e && b.kind == Kind::e) {
        r.add(BmwWord{E(i)}, x_value());
      } else {
        r.add(BmwWord{E(i)}, linv());
      }
      return std::make_pair(std::size_t{2}, r);
    }
    if (p + 2 >= w.size()) return std::nullopt;
    const Letter b = w[p + 1], c = w[p + 2];
    const Node i = a.node, j = b.node;
    if (c.node != i || !rs_->adjacent(i, j)) return std::nullopt;
    const bool ea = a.kind == Kind::e, eb = b.kind == Kind::e, ec = c.kind == Kind::e;
    WordCombination r;
    if (ea && eb && ec) {
      r.add(BmwWord{E(i)}, Scalar(1));
    } else if (ea && !eb && ec) {
      r.add(BmwWord{E(i)}, l());
    } else if (!ea && !eb && ec) {
      r.add(BmwWord{E(j), E(i)}, Scalar(1));
    } else if (ea && !eb && !ec) {
      r.add(BmwWord{E(i), E(j)}, Scalar(1));
    } else if (ea && eb && !ec) {
      r.add(BmwWord{E(i), G(j)}, Scalar(1));
      r.add(BmwWord{E(i)}, m());
      r.add(BmwWord{E(i), E(j)}, -m());
    } else if (!ea && eb && ec) {
      r.add(BmwWord{G(j), E(i)}, Scalar(1));
      r.add(BmwWord{E(i)}, m());
      r.add(BmwWord{E(j), E(i)}, -m());
    } else {
      return std::nullopt;  // g g g and g e g only move
    }
    return std::make_pair(std::size_t{3}, r);
  }

  // g_i e_j g_i = g_j e_i g_j + omega with omega of length at most 2.
  static WordCombination geg_correction(Node i, Node j) {
    using namespace scalars;
    WordCombination r;
    r.add(BmwWord{E(j), G(i)}, -m());
    r.add(BmwWord{E(i), G(j)}, m());
    r.add(BmwWord{G(i), E(j)}, -m());
    r.add(BmwWord{G(j), E(i)}, m());
    r.add(BmwWord{E(j)}, -m() * m());
    r.add(BmwWord{E(i)}, m() * m());
    return r;
  }

  static WordCombination splice(const BmwWord& w, std::size_t p, std::size_t len,
                                const WordCombination& mid) {
    WordCombination out;
    for (const auto& [v, c] : mid.terms()) {
      BmwWord x(w.begin(), w.begin() + p);
      x.insert(x.end(), v.begin(), v.end());
      x.insert(x.end(), w.begin() + p + len, w.end());
      out.add(x, c);
    }
    return out;
  }

  // Explores the orbit of w under the moves. If some member has a redex,
  // returns w as a combination of strictly shorter words. Otherwise returns w
  // as its shortlex-least orbit member plus shorter words, or nullopt when w
  // is that least member.
  std::optional<WordCombination> step(const BmwWord& w) const {
    struct Item {
      BmwWord word;
      WordCombination correction;  // w = word + correction
    };
    std::deque<Item> queue;
    std::unordered_set<BmwWord, BmwWordHash> seen;
    std::optional<Item> least;
    queue.push_back({w, {}});
    seen.insert(w);
    while (!queue.empty()) {
      Item cur = std::move(queue.front());
      queue.pop_front();
      const BmwWord& v = cur.word;
      for (std::size_t p = 0; p < v.size(); ++p)
        if (auto r = redex(v, p)) {
          WordCombination out = cur.correction;
          out.add(splice(v, p, r->first, r->second));
          return out;
        }
      auto push = [&](BmwWord nv, const WordCombination* extra) {
        if (seen.size() >= cap_ || !seen.insert(nv).second) return;
        Item n{std::move(nv), cur.correction};
        if (extra) n.correction.add(*extra);
        queue.push_back(std::move(n));
      };
      for (std::size_t p = 0; p + 1 < v.size(); ++p) {
        const Node i = v[p].node, j = v[p + 1].node;
        if (i != j && !rs_->adjacent(i, j)) {
          BmwWord nv = v;
          std::swap(nv[p], nv[p + 1]);
          push(std::move(nv), nullptr);
        }
        if (p + 2 < v.size() && v[p + 2].node == i && rs_->adjacent(i, j) &&
            v[p].kind == Kind::g && v[p + 2].kind == Kind::g) {
          BmwWord nv = v;
          nv[p].node = nv[p + 2].node = j;
          nv[p + 1].node = i;
          if (v[p + 1].kind == Kind::g) {
            push(std::move(nv), nullptr);
          } else {
            WordCombination extra = splice(v, p, 3, geg_correction(i, j));
            push(std::move(nv), &extra);
          }
        }
      }
      if (!least || ShortLex{}(v, least->word)) least = std::move(cur);
    }
    if (least->word == w) return std::nullopt;
    WordCombination out = least->correction;
    out.add(least->word, Scalar(1));
    return out;
  }

  WordCombination reduce_positive(const BmwWord& w) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(w);
      if (it != memo_.end()) return it->second;
    }
    WordCombination out;
    if (auto s = step(w)) {
      for (const auto& [v, c] : s->terms()) out.add(reduce_positive(v), c);
    } else {
      out = WordCombination(w);
    }
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(w, out);
    return out;
  }

  std::shared_ptr<const RootSystem> rs_;
  std::size_t cap_;
  mutable std::mutex mu_;
  mutable std::unordered_map<BmwWord, WordCombination, BmwWordHash> memo_;
};

inline WordCombination reduce_word(std::shared_ptr<const RootSystem> rs, const BmwWord& w) {
  return WordReducer(std::move(rs)).reduce(w);
}

// Image of a word combination in the Hecke quotient (e -> 0, g -> T_s in the
// full-type Hecke algebra) and in the Lawrence-Krammer module.
template <class Model>
struct RepImage {
  HeckeElement hecke;
  RepMatrix<typename Model::value_type> lk;
  friend bool operator==(const RepImage& a, const RepImage& b) {
    return a.hecke == b.hecke && a.lk == b.lk;
  }
};

template <class Model>
class WordImages {
 public:
  using V = typename Model::value_type;
  using Image = RepImage<Model>;

  explicit WordImages(const LKRepresentation<Model>& lk)
      : lk_(lk), full_(make_full_hecke(std::shared_ptr<const RootSystem>(
                     std::shared_ptr<const RootSystem>{}, &lk.roots()))) {}

  const LKRepresentation<Model>& lk() const { return lk_; }
  const HeckeAlgebraPtr& hecke_algebra() const { return full_; }

  Image of(const BmwWord& w) const {
    HeckeElement h = HeckeElement::unit(full_);
    RepMatrix<V> m = lk_.identity();
    for (const auto& [n, k] : w) {
      switch (k) {
        case Kind::g:
          h = h.times_generator(n);
          m = m * lk_.sigma(n);
          break;
        case Kind::g_inv:
          h = h.times_generator(n, true);
          m = m * lk_.sigma_inv(n);
          break;
        case Kind::e:
          h = HeckeElement(full_);
          m = m * lk_.e(n);
          break;
      }
    }
    return {h, m};
  }

  Image of(const WordCombination& c) const {
    Image acc{HeckeElement(full_), RepMatrix<V>(lk_.dim())};
    for (const auto& [w, s] : c.terms()) {
      Image t = of(w);
      acc.hecke += s * t.hecke;
      acc.lk += lk_.scalar(s) * t.lk;
    }
    return acc;
  }

 private:
  const LKRepresentation<Model>& lk_;
  HeckeAlgebraPtr full_;
};

}  // namespace bmw
