#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bmw {

// Nodes are 0-based internally; every textual interface is 1-based.
using Node = int;
using Word = std::vector<Node>;

inline constexpr int kMaxRank = 16;

enum class Family { A, D, E };

struct DynkinType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const {
    const char f = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
    return std::string(1, f) + std::to_string(rank);
  }

  static bool valid(Family f, int n) {
    if (n < 1 || n > kMaxRank) return false;
    switch (f) {
      case Family::A: return true;
      case Family::D: return n >= 4;
      case Family::E: return n >= 6 && n <= 8;
    }
    return false;
  }

  static DynkinType parse(std::string_view s) {
    if (s.size() < 2) throw std::invalid_argument("bad Dynkin type '" + std::string(s) + "'");
    DynkinType t;
    switch (s[0]) {
      case 'A': case 'a': t.family = Family::A; break;
      case 'D': case 'd': t.family = Family::D; break;
      case 'E': case 'e': t.family = Family::E; break;
      default: throw std::invalid_argument("bad Dynkin type '" + std::string(s) + "'");
    }
    int n = 0;
    for (char c : s.substr(1)) {
      if (c < '0' || c > '9' || n > 100)
        throw std::invalid_argument("bad Dynkin type '" + std::string(s) + "'");
      n = n * 10 + (c - '0');
    }
    if (!valid(t.family, n))
      throw std::invalid_argument("unsupported Dynkin type '" + std::string(s) + "'");
    t.rank = n;
    return t;
  }

  // Bourbaki numbering, 0-based.
  std::vector<std::pair<Node, Node>> edges() const {
    std::vector<std::pair<Node, Node>> e;
    const int n = rank;
    switch (family) {
      case Family::A:
        for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
        break;
      case Family::D:
        for (int i = 0; i + 1 < n - 1; ++i) e.emplace_back(i, i + 1);
        e.emplace_back(n - 3, n - 1);
        break;
      case Family::E:
        e.emplace_back(0, 2);
        e.emplace_back(1, 3);
        for (int i = 2; i + 1 < n; ++i) e.emplace_back(i, i + 1);
        break;
    }
    return e;
  }

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

class Root {
 public:
  Root() { c_.fill(0); }
  Root(int rank, std::initializer_list<int> coeffs) : n_(static_cast<int8_t>(rank)) {
    c_.fill(0);
    int k = 0;
    for (int x : coeffs) c_[k++] = static_cast<int8_t>(x);
  }
  static Root simple(int rank, Node i) {
    Root r;
    r.n_ = static_cast<int8_t>(rank);
    r.c_[i] = 1;
    return r;
  }
  static Root from_vector(const std::vector<int>& v) {
    if (v.empty() || v.size() > kMaxRank) throw std::invalid_argument("bad root vector size");
    Root r;
    r.n_ = static_cast<int8_t>(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) r.c_[k] = static_cast<int8_t>(v[k]);
    return r;
  }

  int rank() const { return n_; }
  int operator[](Node i) const { return c_[i]; }
  int coeff(Node i) const { return c_[i]; }
  int height() const {
    int h = 0;
    for (int k = 0; k < n_; ++k) h += c_[k];
    return h;
  }
  std::vector<Node> support() const {
    std::vector<Node> s;
    for (int k = 0; k < n_; ++k)
      if (c_[k] != 0) s.push_back(k);
    return s;
  }
  bool in_support(Node i) const { return c_[i] != 0; }
  bool is_positive() const {
    bool any = false;
    for (int k = 0; k < n_; ++k) {
      if (c_[k] < 0) return false;
      any |= c_[k] > 0;
    }
    return any;
  }
  bool is_negative() const { return (-*this).is_positive(); }
  bool is_simple() const { return height() == 1 && is_positive(); }
  std::vector<int> to_vector() const { return {c_.begin(), c_.begin() + n_}; }

  friend Root operator+(Root a, const Root& b) {
    for (int k = 0; k < a.n_; ++k) a.c_[k] = static_cast<int8_t>(a.c_[k] + b.c_[k]);
    return a;
  }
  friend Root operator-(Root a) {
    for (int k = 0; k < a.n_; ++k) a.c_[k] = static_cast<int8_t>(-a.c_[k]);
    return a;
  }
  friend Root operator-(const Root& a, const Root& b) { return a + (-b); }
  friend Root operator*(int s, Root a) {
    for (int k = 0; k < a.n_; ++k) a.c_[k] = static_cast<int8_t>(s * a.c_[k]);
    return a;
  }
  friend bool operator==(const Root&, const Root&) = default;
  // Height first, then lexicographic coefficients.
  friend bool operator<(const Root& a, const Root& b) {
    int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.c_ < b.c_;
  }

  std::string to_string() const {
    std::string s = "(";
    for (int k = 0; k < n_; ++k) s += (k ? "," : "") + std::to_string(c_[k]);
    return s + ")";
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (int k = 0; k < n_; ++k) h = h * 31u + static_cast<std::size_t>(c_[k] + 64);
    return h;
  }

 private:
  std::array<int8_t, kMaxRank> c_{};
  int8_t n_ = 0;
};

struct RootHash {
  std::size_t operator()(const Root& r) const { return r.hash(); }
};

// Weyl group element stored as the images of the simple roots.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(int rank) {
    WeylElement w;
    w.n_ = rank;
    w.img_.assign(static_cast<std::size_t>(rank) * rank, 0);
    for (int k = 0; k < rank; ++k) w.img_[k * rank + k] = 1;
    return w;
  }

  int rank() const { return n_; }
  Root image(Node k) const {
    std::vector<int> v(img_.begin() + k * n_, img_.begin() + (k + 1) * n_);
    return Root::from_vector(v);
  }
  int entry(Node k, Node j) const { return img_[k * n_ + j]; }
  bool is_identity() const { return *this == identity(n_); }

  // Image of alpha_k is negative: w s_k is shorter than w.
  bool has_right_descent(Node k) const {
    for (int j = 0; j < n_; ++j) {
      int v = img_[k * n_ + j];
      if (v != 0) return v < 0;
    }
    return false;
  }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

  std::string_view key() const {
    return {reinterpret_cast<const char*>(img_.data()), img_.size()};
  }

 private:
  friend class RootSystem;
  int n_ = 0;
  std::vector<int8_t> img_;
};

struct WeylHash {
  std::size_t operator()(const WeylElement& w) const {
    return std::hash<std::string_view>{}(w.key());
  }
};

// Cartan type of a parabolic node subset, classified per component.
struct ParabolicInfo {
  std::vector<std::string> components;  // e.g. {"A1", "A3"}
  mpz_class order = 1;
  std::string label() const {
    if (components.empty()) return "empty";
    std::string s;
    for (const auto& c : components) s += (s.empty() ? "" : "+") + c;
    return s;
  }
};

inline mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline mpz_class weyl_order(Family f, int n) {
  switch (f) {
    case Family::A: return factorial(n + 1);
    case Family::D: {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), 2, n - 1);
      return p * factorial(n);
    }
    case Family::E:
      return n == 6 ? mpz_class(51840) : n == 7 ? mpz_class(2903040) : mpz_class("696729600");
  }
  return 0;
}

class RootSystem {
 public:
  explicit RootSystem(DynkinType type) : type_(type), n_(type.rank) {
    if (!DynkinType::valid(type.family, type.rank))
      throw std::invalid_argument("invalid Dynkin type");
    adj_.assign(n_, std::vector<bool>(n_, false));
    for (auto [a, b] : type.edges()) adj_[a][b] = adj_[b][a] = true;
    generate_roots();
    highest_ = roots_.back();
    for (Node j = 0; j < n_; ++j)
      if (pairing_simple(j, highest_) == 0) c_nodes_.push_back(j);
    build_geodesics();
    build_coset_trees();
  }

  static RootSystem build(const std::string& name) { return RootSystem(DynkinType::parse(name)); }

  const DynkinType& type() const { return type_; }
  int rank() const { return n_; }
  bool adjacent(Node i, Node j) const { return adj_[i][j]; }
  int cartan(Node i, Node j) const { return i == j ? 2 : adj_[i][j] ? -1 : 0; }
  std::vector<Node> neighbors(Node i) const {
    std::vector<Node> r;
    for (Node j = 0; j < n_; ++j)
      if (adj_[i][j]) r.push_back(j);
    return r;
  }

  const std::vector<Root>& positive_roots() const { return roots_; }
  std::size_t num_positive() const { return roots_.size(); }
  const Root& highest_root() const { return highest_; }
  const std::vector<Node>& c_nodes() const { return c_nodes_; }
  bool in_c(Node j) const {
    return std::find(c_nodes_.begin(), c_nodes_.end(), j) != c_nodes_.end();
  }
  Root simple(Node i) const { return Root::simple(n_, i); }

  std::optional<std::size_t> index_of(const Root& r) const {
    auto it = index_.find(r);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool is_positive_root(const Root& r) const { return index_.count(r) > 0; }
  std::size_t require_index(const Root& r) const {
    auto i = index_of(r);
    if (!i) throw std::invalid_argument("not a positive root: " + r.to_string());
    return *i;
  }

  int pairing_simple(Node i, const Root& b) const {
    int s = 0;
    for (Node k = 0; k < n_; ++k) s += cartan(i, k) * b[k];
    return s;
  }
  int pairing(const Root& a, const Root& b) const {
    int s = 0;
    for (Node k = 0; k < n_; ++k)
      if (a[k] != 0) s += a[k] * pairing_simple(k, b);
    return s;
  }
  Root reflect(Node i, const Root& b) const { return b - pairing_simple(i, b) * simple(i); }

  // Tree metric on the diagram.
  int distance(Node i, Node j) const { return dist_[i][j]; }
  // Nodes of the unique path from i to j, both ends included.
  std::vector<Node> path(Node i, Node j) const {
    std::vector<Node> p{i};
    while (p.back() != j) {
      Node cur = p.back();
      for (Node k : neighbors(cur))
        if (dist_[k][j] == dist_[cur][j] - 1) {
          p.push_back(k);
          break;
        }
    }
    return p;
  }

  // Support node nearest to i.
  Node proj(Node i, const Root& b) const {
    require_index(b);
    Node best = -1;
    for (Node k : b.support())
      if (best < 0 || dist_[i][k] < dist_[i][best]) best = k;
    return best;
  }
  // Nodes of the path from i to the support that are not in the support.
  std::vector<Node> geod(Node i, const Root& b) const {
    std::vector<Node> r;
    for (Node k : path(i, proj(i, b)))
      if (!b.in_support(k)) r.push_back(k);
    return r;
  }
  // Nodes j with (alpha_j, b) = 1 and r_j w_{b - alpha_j, h} = w_{b, h}, h = proj(k, b).
  std::vector<Node> jset(Node k, const Root& b) const {
    require_index(b);
    Node h = proj(k, b);
    WeylElement target = word_element(min_coset_word(b, h));
    std::vector<Node> r;
    for (Node j = 0; j < n_; ++j) {
      if (pairing_simple(j, b) != 1) continue;
      Word w{j};
      Word tail = min_coset_word(b - simple(j), h);
      w.insert(w.end(), tail.begin(), tail.end());
      if (word_element(w) == target) r.push_back(j);
    }
    return r;
  }

  // ---- Weyl group ----
  WeylElement identity() const { return WeylElement::identity(n_); }

  // w * r_s: only the image of alpha_s changes sign, others pick up multiples.
  WeylElement times_simple(const WeylElement& w, Node s) const {
    WeylElement r = w;
    for (Node k = 0; k < n_; ++k) {
      int a = cartan(s, k);
      if (a == 0 || k == s) continue;
      for (Node j = 0; j < n_; ++j)
        r.img_[k * n_ + j] = static_cast<int8_t>(r.img_[k * n_ + j] - a * w.img_[s * n_ + j]);
    }
    for (Node j = 0; j < n_; ++j) r.img_[s * n_ + j] = static_cast<int8_t>(-w.img_[s * n_ + j]);
    return r;
  }
  // r_s * w.
  WeylElement simple_times(Node s, const WeylElement& w) const {
    WeylElement r = w;
    for (Node k = 0; k < n_; ++k) {
      Root img = reflect(s, w.image(k));
      for (Node j = 0; j < n_; ++j) r.img_[k * n_ + j] = static_cast<int8_t>(img[j]);
    }
    return r;
  }

  Root act(const WeylElement& w, const Root& b) const {
    Root r = Root::from_vector(std::vector<int>(n_, 0));
    for (Node k = 0; k < n_; ++k)
      if (b[k] != 0) r = r + b[k] * w.image(k);
    return r;
  }

  WeylElement compose(const WeylElement& a, const WeylElement& b) const {
    WeylElement r = b;
    for (Node k = 0; k < n_; ++k) {
      Root img = act(a, b.image(k));
      for (Node j = 0; j < n_; ++j) r.img_[k * n_ + j] = static_cast<int8_t>(img[j]);
    }
    return r;
  }

  WeylElement word_element(const Word& w) const {
    WeylElement r = identity();
    for (Node s : w) r = times_simple(r, s);
    return r;
  }

  // Repeatedly strip the smallest right descent; restricted to `allowed`
  // nodes when given. Returns nullopt if the element leaves that parabolic.
  std::optional<Word> reduced_word_within(WeylElement w, const std::vector<bool>* allowed) const {
    Word rev;
    while (!w.is_identity()) {
      Node found = -1;
      for (Node s = 0; s < n_; ++s)
        if (w.has_right_descent(s)) {
          if (allowed && !(*allowed)[s]) return std::nullopt;
          found = s;
          break;
        }
      if (found < 0) return std::nullopt;
      rev.push_back(found);
      w = times_simple(w, found);
    }
    return Word(rev.rbegin(), rev.rend());
  }
  Word reduced_word(const WeylElement& w) const { return *reduced_word_within(w, nullptr); }

  WeylElement invert(const WeylElement& w) const {
    Word rw = reduced_word(w);
    return word_element(Word(rw.rbegin(), rw.rend()));
  }

  int length(const WeylElement& w) const {
    int c = 0;
    for (const auto& b : roots_)
      if (act(w, b).is_negative()) ++c;
    return c;
  }

  // Reduced word for the minimal w with w alpha_i = b.
  Word min_coset_word(const Root& b, Node i) const {
    std::size_t idx = require_index(b);
    const auto& tree = coset_tree_[i];
    Word w;
    while (tree[idx].first >= 0) {
      w.push_back(tree[idx].second);
      idx = static_cast<std::size_t>(tree[idx].first);
    }
    return w;
  }

  // Greedy ascent from b to the highest root; smallest admissible node first.
  Word d_beta(const Root& b, bool largest_first = false) const {
    require_index(b);
    Word w;
    Root cur = b;
    while (!(cur == highest_)) {
      Node pick = -1;
      for (Node j = 0; j < n_; ++j)
        if (pairing_simple(j, cur) == -1) {
          pick = j;
          if (!largest_first) break;
        }
      if (pick < 0) throw std::logic_error("d_beta: no ascent from " + cur.to_string());
      w.push_back(pick);
      cur = cur + simple(pick);
    }
    return w;
  }

  // Positive word for the reflection in b: w_{b,k} k w_{b,k}^{-1}.
  Word s_beta_word(const Root& b) const {
    Node k = b.support().front();
    Word w = min_coset_word(b, k);
    Word r = w;
    r.push_back(k);
    r.insert(r.end(), w.rbegin(), w.rend());
    if (static_cast<int>(r.size()) != 2 * b.height() - 1)
      throw std::logic_error("s_beta word has unexpected length");
    return r;
  }

  // ---- parabolic data ----
  ParabolicInfo classify(const std::vector<Node>& nodes) const {
    ParabolicInfo info;
    std::vector<bool> in(n_, false), seen(n_, false);
    for (Node j : nodes) in[j] = true;
    for (Node start : nodes) {
      if (seen[start]) continue;
      std::vector<Node> comp;
      std::deque<Node> q{start};
      seen[start] = true;
      while (!q.empty()) {
        Node u = q.front();
        q.pop_front();
        comp.push_back(u);
        for (Node v : neighbors(u))
          if (in[v] && !seen[v]) {
            seen[v] = true;
            q.push_back(v);
          }
      }
      auto [fam, rk] = classify_component(comp, in);
      info.components.push_back(DynkinType{fam, rk}.name());
      info.order *= weyl_order(fam, rk);
    }
    return info;
  }
  ParabolicInfo c_info() const { return classify(c_nodes_); }
  mpz_class weyl_group_order() const { return weyl_order(type_.family, n_); }

 private:
  void generate_roots() {
    std::vector<Root> frontier;
    for (Node i = 0; i < n_; ++i) frontier.push_back(simple(i));
    std::unordered_map<Root, bool, RootHash> seen;
    for (const auto& r : frontier) seen[r] = true;
    std::vector<Root> all = frontier;
    while (!frontier.empty()) {
      std::vector<Root> next;
      for (const auto& b : frontier)
        for (Node i = 0; i < n_; ++i)
          if (pairing_simple(i, b) == -1) {
            Root c = b + simple(i);
            if (!seen[c]) {
              seen[c] = true;
              next.push_back(c);
              all.push_back(c);
            }
          }
      frontier = std::move(next);
    }
    std::sort(all.begin(), all.end());
    roots_ = std::move(all);
    for (std::size_t k = 0; k < roots_.size(); ++k) index_[roots_[k]] = k;
  }

  void build_geodesics() {
    dist_.assign(n_, std::vector<int>(n_, -1));
    for (Node s = 0; s < n_; ++s) {
      std::deque<Node> q{s};
      dist_[s][s] = 0;
      while (!q.empty()) {
        Node u = q.front();
        q.pop_front();
        for (Node v : neighbors(u))
          if (dist_[s][v] < 0) {
            dist_[s][v] = dist_[s][u] + 1;
            q.push_back(v);
          }
      }
    }
  }

  // BFS over positive roots from alpha_i along reflections, smallest node first.
  // Entry: (parent index, node applied to reach this root from the parent).
  void build_coset_trees() {
    coset_tree_.assign(n_, {});
    for (Node i = 0; i < n_; ++i) {
      auto& tree = coset_tree_[i];
      tree.assign(roots_.size(), {-2, -1});
      std::size_t start = index_.at(simple(i));
      tree[start] = {-1, -1};
      std::deque<std::size_t> q{start};
      while (!q.empty()) {
        std::size_t u = q.front();
        q.pop_front();
        for (Node k = 0; k < n_; ++k) {
          Root c = reflect(k, roots_[u]);
          auto it = index_.find(c);
          if (it == index_.end() || tree[it->second].first != -2) continue;
          tree[it->second] = {static_cast<int>(u), k};
          q.push_back(it->second);
        }
      }
    }
  }

  std::pair<Family, int> classify_component(const std::vector<Node>& comp,
                                            const std::vector<bool>& in) const {
    const int k = static_cast<int>(comp.size());
    Node branch = -1;
    for (Node u : comp) {
      int deg = 0;
      for (Node v : neighbors(u)) deg += in[v];
      if (deg >= 3) branch = u;
    }
    if (branch < 0) return {Family::A, k};
    std::vector<int> arms;
    for (Node v : neighbors(branch)) {
      if (!in[v]) continue;
      int len = 0;
      Node prev = branch, cur = v;
      while (true) {
        ++len;
        Node nxt = -1;
        for (Node w : neighbors(cur))
          if (in[w] && w != prev) nxt = w;
        if (nxt < 0) break;
        prev = cur;
        cur = nxt;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {Family::D, k};
    return {Family::E, k};
  }

  DynkinType type_;
  int n_;
  std::vector<std::vector<bool>> adj_;
  std::vector<Root> roots_;
  std::unordered_map<Root, std::size_t, RootHash> index_;
  Root highest_;
  std::vector<Node> c_nodes_;
  std::vector<std::vector<int>> dist_;
  std::vector<std::vector<std::pair<int, Node>>> coset_tree_;
};

}  // namespace bmw
