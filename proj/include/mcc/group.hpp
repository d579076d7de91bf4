#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"

namespace mcc {

/// Finite group given by its Cayley table: table[a][b] is the index of a·b.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels = {}) : table_(std::move(table)), labels_(std::move(labels)) {
    const std::size_t n = table_.size();
    if (n == 0) throw domain_error("group table is empty");
    if (labels_.empty())
      for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
    if (labels_.size() != n) throw domain_error("group labels do not match the order");
    if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n) throw domain_error("group labels are not distinct");
    validate();
  }

  std::size_t order() const noexcept { return table_.size(); }
  std::size_t identity() const noexcept { return id_; }
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t a) const { return labels_.at(a); }

  std::size_t mul(std::size_t a, std::size_t b) const { return table_.at(a).at(b); }
  std::size_t inv(std::size_t a) const { return inv_.at(a); }

  std::size_t index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw domain_error("no group element labelled '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
  }

  std::size_t element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != id_; x = mul(x, a)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
      for (std::size_t b = 0; b < a; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  bool is_central(std::size_t c) const {
    for (std::size_t a = 0; a < order(); ++a)
      if (mul(a, c) != mul(c, a)) return false;
    return true;
  }

  std::vector<std::size_t> central_involutions() const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < order(); ++a)
      if (a != id_ && mul(a, a) == id_ && is_central(a)) out.push_back(a);
    return out;
  }

  bool is_subgroup(const std::vector<std::size_t>& h) const {
    if (h.empty()) return false;
    std::set<std::size_t> s(h.begin(), h.end());
    if (s.size() != h.size()) return false;
    for (std::size_t a : h)
      if (a >= order()) return false;
    for (std::size_t a : h)
      for (std::size_t b : h)
        if (!s.count(mul(a, b))) return false;
    return true;
  }

  /// Sorted element indices of the subgroup generated by `gens`.
  std::vector<std::size_t> generated(const std::vector<std::size_t>& gens) const {
    std::set<std::size_t> s{id_};
    std::vector<std::size_t> frontier{id_};
    for (std::size_t g : gens)
      if (g >= order()) throw domain_error("bad group element index");
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t x : frontier)
        for (std::size_t g : gens)
          if (s.insert(mul(x, g)).second) next.push_back(mul(x, g));
      frontier = std::move(next);
    }
    return {s.begin(), s.end()};
  }

  /// All subgroups generated by at most two elements, sorted by order then content.
  std::vector<std::vector<std::size_t>> subgroups() const {
    std::set<std::vector<std::size_t>> all;
    for (std::size_t a = 0; a < order(); ++a)
      for (std::size_t b = a; b < order(); ++b) all.insert(generated({a, b}));
    std::vector<std::vector<std::size_t>> out(all.begin(), all.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
    return out;
  }

  /// Left cosets σH as sorted index lists, ordered by smallest element.
  std::vector<std::vector<std::size_t>> left_cosets(const std::vector<std::size_t>& h) const {
    if (!is_subgroup(h)) throw precondition_error("not a subgroup");
    std::vector<bool> seen(order(), false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < order(); ++s) {
      if (seen[s]) continue;
      std::vector<std::size_t> c;
      for (std::size_t x : h) c.push_back(mul(s, x));
      std::sort(c.begin(), c.end());
      for (std::size_t x : c) seen[x] = true;
      out.push_back(std::move(c));
    }
    return out;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_ && a.labels_ == b.labels_; }

 private:
  void validate() {
    const std::size_t n = order();
    for (std::size_t a = 0; a < n; ++a) {
      if (table_[a].size() != n) throw domain_error("group table row " + std::to_string(a) + " has wrong length");
      std::vector<bool> row(n, false), col(n, false);
      for (std::size_t b = 0; b < n; ++b) {
        if (table_[a][b] >= n) throw domain_error("group table entry out of range at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        if (row[table_[a][b]]) throw domain_error("group table is not a Latin square: row " + std::to_string(a) + " repeats " + std::to_string(table_[a][b]));
        row[table_[a][b]] = true;
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (table_[b][a] >= n) throw domain_error("group table entry out of range");
        if (col[table_[b][a]]) throw domain_error("group table is not a Latin square: column " + std::to_string(a) + " repeats " + std::to_string(table_[b][a]));
        col[table_[b][a]] = true;
      }
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
      if (ok) {
        id_ = e;
        found = true;
      }
    }
    if (!found) throw domain_error("group table has no identity");
    auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
      if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
        throw domain_error("group table is not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
    };
    if (n <= 24) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c) assoc(a, b, c);
    } else {
      std::mt19937_64 rng(n);
      std::uniform_int_distribution<std::size_t> d(0, n - 1);
      for (int t = 0; t < 20000; ++t) assoc(d(rng), d(rng), d(rng));
    }
    inv_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (table_[a][b] == id_) inv_[a] = b;
  }

  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> inv_;
  std::size_t id_ = 0;
};

namespace detail {

using Perm = std::vector<std::size_t>;

inline std::string cycle_label(const Perm& p) {
  std::string s;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (s.back() != '(') s += " ";
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "e" : s;
}

/// Permutation group generated by `gens` (images of 0..d−1), elements sorted
/// lexicographically so the identity comes first. (p·q)(x) = p(q(x)).
inline FiniteGroup permutation_group(const std::vector<Perm>& gens) {
  const std::size_t d = gens.front().size();
  Perm id(d);
  for (std::size_t i = 0; i < d; ++i) id[i] = i;
  auto compose = [](const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
  };
  std::set<Perm> elems{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto y = compose(x, g);
        if (elems.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  std::vector<Perm> list(elems.begin(), elems.end());
  std::map<Perm, std::size_t> idx;
  for (std::size_t i = 0; i < list.size(); ++i) idx[list[i]] = i;
  std::vector<std::vector<std::size_t>> table(list.size(), std::vector<std::size_t>(list.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < list.size(); ++i) {
    labels.push_back(cycle_label(list[i]));
    for (std::size_t j = 0; j < list.size(); ++j) table[i][j] = idx.at(compose(list[i], list[j]));
  }
  return FiniteGroup(std::move(table), std::move(labels));
}

inline Perm cycles(std::size_t d, const std::vector<std::vector<std::size_t>>& cs) {
  Perm p(d);
  for (std::size_t i = 0; i < d; ++i) p[i] = i;
  for (const auto& c : cs)
    for (std::size_t k = 0; k < c.size(); ++k) p[c[k] - 1] = c[(k + 1) % c.size()] - 1;
  return p;
}

inline FiniteGroup cyclic(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a)));
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(t), std::move(labels));
}

inline FiniteGroup klein() {
  std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return FiniteGroup(std::move(t), {"e", "a", "b", "ab"});
}

inline FiniteGroup quaternion() {
  // element 2u + s  ↔  (−1)^s · q_u with q = (1, i, j, k)
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      const std::size_t ua = a / 2, ub = b / 2;
      const std::size_t s = (a % 2 + b % 2 + static_cast<std::size_t>(sign[ua][ub])) % 2;
      t[a][b] = 2 * static_cast<std::size_t>(unit[ua][ub]) + s;
    }
  return FiniteGroup(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

}  // namespace detail

inline std::vector<std::string> group_catalog_names() {
  std::vector<std::string> names;
  for (int n = 2; n <= 12; ++n) names.push_back("C" + std::to_string(n));
  for (const char* s : {"C2xC2", "S3", "D4", "Q8", "A4", "S4", "D6"}) names.emplace_back(s);
  return names;
}

/// Catalog group by name: C2…C12, C2xC2, S3, D4, Q8, A4, S4, D6.
inline FiniteGroup catalog_group(const std::string& name) {
  using detail::cycles;
  using detail::permutation_group;
  if (name.size() >= 2 && name[0] == 'C' && name.find('x') == std::string::npos) {
    const int n = std::stoi(name.substr(1));
    if (n >= 2 && n <= 12) return detail::cyclic(static_cast<std::size_t>(n));
  }
  if (name == "C2xC2") return detail::klein();
  if (name == "S3") return permutation_group({cycles(3, {{1, 2}}), cycles(3, {{1, 2, 3}})});
  if (name == "D4") return permutation_group({cycles(4, {{1, 2, 3, 4}}), cycles(4, {{2, 4}})});
  if (name == "Q8") return detail::quaternion();
  if (name == "A4") return permutation_group({cycles(4, {{1, 2, 3}}), cycles(4, {{1, 2}, {3, 4}})});
  if (name == "S4") return permutation_group({cycles(4, {{1, 2}}), cycles(4, {{1, 2, 3, 4}})});
  if (name == "D6") return permutation_group({cycles(6, {{1, 2, 3, 4, 5, 6}}), cycles(6, {{2, 6}, {3, 5}})});
  throw domain_error("unknown catalog group '" + name + "'");
}

}  // namespace mcc
