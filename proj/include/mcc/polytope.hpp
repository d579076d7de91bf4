#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "laurent.hpp"
#include "matrix.hpp"

namespace mcc {

using Point = std::vector<long>;

inline constexpr std::size_t max_polytope_dim = 4;
/// Coordinates are bounded so facet normals and determinants fit in 128 bits.
inline constexpr long max_coordinate = 1L << 20;

namespace detail {

using i128 = __int128;
using Vec128 = std::vector<i128>;

inline BigInt to_big(i128 x) {
  const bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  BigInt hi(static_cast<unsigned long>(u >> 64));
  BigInt lo(static_cast<unsigned long>(u & ~0UL));
  BigInt r = (hi << 64) + lo;
  return neg ? BigInt(-r) : r;
}

inline i128 det128(std::vector<Vec128> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  i128 s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<Vec128> minor;
    for (std::size_t r = 1; r < n; ++r) {
      Vec128 row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(std::move(row));
    }
    const i128 d = det128(std::move(minor));
    s += (c % 2 == 0 ? 1 : -1) * m[0][c] * d;
  }
  return s;
}

inline i128 dot(const Vec128& a, const Vec128& b) {
  i128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::size_t rank128(const std::vector<Vec128>& rows) {
  if (rows.empty()) return 0;
  Grid<BigInt> g;
  for (const auto& r : rows) {
    std::vector<BigInt> row;
    for (auto x : r) row.push_back(to_big(x));
    g.push_back(std::move(row));
  }
  return bareiss(std::move(g)).rank();
}

struct Facet {
  std::vector<std::size_t> idx;  // sorted simplex vertex indices
  Vec128 normal;                 // outward
  i128 offset = 0;               // normal·x ≤ offset on the hull
};

/// Normal of the hyperplane through k points in k-space (generalized cross product).
inline Vec128 hyperplane_normal(const std::vector<Vec128>& pts, const std::vector<std::size_t>& idx) {
  const std::size_t k = pts[idx[0]].size();
  std::vector<Vec128> rows;
  for (std::size_t j = 1; j < idx.size(); ++j) {
    Vec128 r(k);
    for (std::size_t c = 0; c < k; ++c) r[c] = pts[idx[j]][c] - pts[idx[0]][c];
    rows.push_back(std::move(r));
  }
  Vec128 n(k);
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<Vec128> minor;
    for (const auto& r : rows) {
      Vec128 mr;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) mr.push_back(r[j]);
      minor.push_back(std::move(mr));
    }
    n[c] = (c % 2 == 0 ? 1 : -1) * det128(std::move(minor));
  }
  return n;
}

/// Triangulated boundary of the convex hull of full-dimensional points in k-space, k ≥ 2,
/// by beneath-beyond insertion. `simplex` holds k+1 affinely independent indices.
inline std::vector<Facet> incremental_hull(const std::vector<Vec128>& pts, const std::vector<std::size_t>& simplex) {
  const std::size_t k = pts.front().size();
  Vec128 inner(k, 0);  // (k+1)·(interior point)
  for (auto i : simplex)
    for (std::size_t c = 0; c < k; ++c) inner[c] += pts[i][c];
  const i128 scale = static_cast<i128>(k + 1);

  auto make = [&](std::vector<std::size_t> idx) {
    std::sort(idx.begin(), idx.end());
    Facet f;
    f.normal = hyperplane_normal(pts, idx);
    f.offset = dot(f.normal, pts[idx[0]]);
    if (dot(f.normal, inner) - scale * f.offset > 0) {
      for (auto& x : f.normal) x = -x;
      f.offset = -f.offset;
    }
    f.idx = std::move(idx);
    return f;
  };

  std::vector<Facet> facets;
  for (std::size_t drop = 0; drop <= k; ++drop) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j <= k; ++j)
      if (j != drop) idx.push_back(simplex[j]);
    facets.push_back(make(std::move(idx)));
  }

  std::vector<bool> used(pts.size(), false);
  for (auto i : simplex) used[i] = true;
  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (used[p]) continue;
    std::map<std::vector<std::size_t>, int> ridges;
    std::vector<Facet> keep;
    keep.reserve(facets.size());
    bool any = false;
    for (auto& f : facets) {
      if (dot(f.normal, pts[p]) > f.offset) {
        any = true;
        for (std::size_t drop = 0; drop < f.idx.size(); ++drop) {
          std::vector<std::size_t> r;
          for (std::size_t j = 0; j < f.idx.size(); ++j)
            if (j != drop) r.push_back(f.idx[j]);
          ++ridges[r];
        }
      } else {
        keep.push_back(std::move(f));
      }
    }
    if (!any) {
      facets = std::move(keep);
      continue;
    }
    for (const auto& [r, count] : ridges) {
      if (count != 1) continue;
      auto idx = r;
      idx.push_back(p);
      keep.push_back(make(std::move(idx)));
    }
    facets = std::move(keep);
  }
  return facets;
}

}  // namespace detail

/// Convex hull of finitely many integer points in dimension ≤ 4, stored by its
/// vertices in lexicographic order together with an exact facet description.
class LatticePolytope {
 public:
  /// Ambient dimension.
  std::size_t dim() const noexcept { return dim_; }
  /// Dimension of the affine hull.
  std::size_t affine_dim() const noexcept { return coords_.size(); }
  const std::vector<Point>& vertices() const noexcept { return vertices_; }

  /// Euclidean volume in the ambient dimension (zero for lower-dimensional bodies).
  const BigRat& volume() const noexcept { return volume_; }

  bool contains(const Point& x) const {
    if (x.size() != dim_) throw domain_error("point dimension mismatch");
    // Affine hull membership: x − origin must lie in the span of the edge basis.
    std::vector<detail::Vec128> rows = span_;
    detail::Vec128 d(dim_);
    for (std::size_t i = 0; i < dim_; ++i) d[i] = static_cast<detail::i128>(x[i]) - vertices_.front()[i];
    rows.push_back(d);
    if (detail::rank128(rows) != span_.size()) return false;
    if (coords_.empty()) return true;
    const auto y = project(x);
    if (coords_.size() == 1) return lo1_ <= y[0] && y[0] <= hi1_;
    for (const auto& f : facets_)
      if (detail::dot(f.normal, y) > f.offset) return false;
    return true;
  }

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

  friend LatticePolytope hull(const std::vector<Point>& points);

 private:
  detail::Vec128 project(const Point& x) const {
    detail::Vec128 y;
    for (auto c : coords_) y.push_back(x[c]);
    return y;
  }

  std::size_t dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<std::size_t> coords_;         // coordinates giving an affine chart of the hull
  std::vector<detail::Vec128> span_;        // basis of the direction space
  std::vector<detail::Facet> facets_;       // in chart coordinates, k ≥ 2
  detail::i128 lo1_ = 0, hi1_ = 0;          // interval, k = 1
  BigRat volume_ = 0;
};

inline LatticePolytope hull(const std::vector<Point>& points) {
  using detail::i128;
  using detail::Vec128;
  if (points.empty()) throw domain_error("convex hull of an empty point set");
  const std::size_t n = points.front().size();
  if (n == 0 || n > max_polytope_dim) throw precondition_error("polytope dimension must be between 1 and 4");
  for (const auto& p : points) {
    if (p.size() != n) throw domain_error("points of different dimensions");
    for (long c : p)
      if (c > max_coordinate || c < -max_coordinate) throw cap_exceeded("polytope coordinate out of range");
  }

  std::vector<Point> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  LatticePolytope out;
  out.dim_ = n;

  // Affine hull: greedy independent edge directions from the smallest point.
  std::vector<std::size_t> simplex{0};
  for (std::size_t i = 1; i < pts.size() && out.span_.size() < n; ++i) {
    Vec128 d(n);
    for (std::size_t c = 0; c < n; ++c) d[c] = static_cast<i128>(pts[i][c]) - pts[0][c];
    auto trial = out.span_;
    trial.push_back(d);
    if (detail::rank128(trial) > out.span_.size()) {
      out.span_ = std::move(trial);
      simplex.push_back(i);
    }
  }
  const std::size_t k = out.span_.size();
  for (std::size_t c = 0; c < n && out.coords_.size() < k; ++c) {
    std::vector<Vec128> cols;
    auto trial = out.coords_;
    trial.push_back(c);
    for (const auto& row : out.span_) {
      Vec128 r;
      for (auto t : trial) r.push_back(row[t]);
      cols.push_back(std::move(r));
    }
    if (detail::rank128(cols) == trial.size()) out.coords_ = std::move(trial);
  }

  if (k == 0) {
    out.vertices_ = {pts[0]};
    return out;
  }
  std::vector<Vec128> chart;
  for (const auto& p : pts) chart.push_back(out.project(p));
  if (k == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < chart.size(); ++i) {
      if (chart[i][0] < chart[lo][0]) lo = i;
      if (chart[i][0] > chart[hi][0]) hi = i;
    }
    out.lo1_ = chart[lo][0];
    out.hi1_ = chart[hi][0];
    out.vertices_ = {pts[lo], pts[hi]};
    std::sort(out.vertices_.begin(), out.vertices_.end());
    if (n == 1) out.volume_ = BigRat(detail::to_big(out.hi1_ - out.lo1_));
    return out;
  }

  out.facets_ = detail::incremental_hull(chart, simplex);

  // A boundary point is a vertex iff the facet hyperplanes through it have full-rank normals.
  std::set<std::size_t> candidates;
  for (const auto& f : out.facets_) candidates.insert(f.idx.begin(), f.idx.end());
  std::vector<std::size_t> vidx;
  for (auto c : candidates) {
    std::vector<Vec128> normals;
    for (const auto& f : out.facets_)
      if (detail::dot(f.normal, chart[c]) == f.offset) normals.push_back(f.normal);
    if (detail::rank128(normals) == k) vidx.push_back(c);
  }
  for (auto i : vidx) out.vertices_.push_back(pts[i]);
  std::sort(out.vertices_.begin(), out.vertices_.end());

  if (k == n) {
    // Fan from the lexicographically smallest vertex over the boundary simplices.
    const Vec128 apex = out.project(out.vertices_.front());
    BigInt twice = 0;
    for (const auto& f : out.facets_) {
      std::vector<Vec128> m;
      for (auto i : f.idx) {
        Vec128 r(k);
        for (std::size_t c = 0; c < k; ++c) r[c] = chart[i][c] - apex[c];
        m.push_back(std::move(r));
      }
      i128 d = detail::det128(std::move(m));
      twice += detail::to_big(d < 0 ? -d : d);
    }
    BigInt fact = 1;
    for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<unsigned long>(i);
    out.volume_ = make_rat(twice, fact);
  }
  return out;
}

inline BigRat volume(const LatticePolytope& p) { return p.volume(); }

inline LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.dim() != b.dim()) throw domain_error("Minkowski sum of polytopes in different dimensions");
  std::vector<Point> sums;
  sums.reserve(a.vertices().size() * b.vertices().size());
  for (const auto& u : a.vertices())
    for (const auto& v : b.vertices()) {
      Point s(u.size());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = u[i] + v[i];
      sums.push_back(std::move(s));
    }
  return hull(sums);
}

/// n!·V(P₁,…,Pₙ) by inclusion–exclusion over the 2ⁿ−1 partial Minkowski sums.
inline BigRat scaled_mixed_volume(const std::vector<LatticePolytope>& bodies) {
  const std::size_t n = bodies.size();
  if (n == 0) throw precondition_error("mixed volume of no bodies");
  for (const auto& b : bodies)
    if (b.dim() != n) throw precondition_error("mixed volume needs n bodies in dimension n");
  std::vector<LatticePolytope> partial(std::size_t{1} << n);
  BigRat total = 0;
  for (std::size_t mask = 1; mask < partial.size(); ++mask) {
    std::size_t top = 0;
    while ((mask >> (top + 1)) != 0) ++top;
    const std::size_t rest = mask & ~(std::size_t{1} << top);
    partial[mask] = rest == 0 ? bodies[top] : minkowski_sum(partial[rest], bodies[top]);
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if ((n - size) % 2 == 0)
      total += partial[mask].volume();
    else
      total -= partial[mask].volume();
  }
  return total;
}

/// Mixed volume normalized so that V(P,…,P) = Vol(P).
inline BigRat mixed_volume(const std::vector<LatticePolytope>& bodies) {
  BigInt fact = 1;
  for (std::size_t i = 2; i <= bodies.size(); ++i) fact *= static_cast<unsigned long>(i);
  return scaled_mixed_volume(bodies) / BigRat(fact);
}

/// Bernstein–Kushnirenko number n!·V(Δ(S₁),…,Δ(Sₙ)) of n supports in Zⁿ.
inline BigInt bk_number(const std::vector<std::vector<Point>>& supports) {
  std::vector<LatticePolytope> bodies;
  for (const auto& s : supports) bodies.push_back(hull(s));
  const BigRat v = scaled_mixed_volume(bodies);
  if (v.get_den() != 1 || v < 0) throw std::logic_error("BK number is not a nonnegative integer");
  return v.get_num();
}

/// Newton polytope of the generic linear polynomial: conv{0, e₁, …, eₙ}.
inline std::vector<Point> standard_simplex(std::size_t n, long scale = 1) {
  std::vector<Point> s{Point(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    Point e(n, 0);
    e[i] = scale;
    s.push_back(std::move(e));
  }
  return s;
}

struct BKReport {
  /// entries[i-1] = BK(P ×i, ℓ ×(n−i)).
  std::vector<BigInt> entries;
  BigInt bkd = 0;
  /// The cleared support is a single point; BK-degree is reported as zero.
  bool single_point = false;
};

inline BKReport bk_degree(const LaurentPoly& p) {
  if (p.is_zero()) throw domain_error("BK-degree of the zero polynomial");
  const std::size_t n = p.nvars();
  const auto support = clear_monomial(p).support();
  const auto simplex = standard_simplex(n);
  BKReport rep;
  rep.single_point = support.size() == 1;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::vector<Point>> args(i, support);
    args.insert(args.end(), n - i, simplex);
    rep.entries.push_back(rep.single_point ? BigInt(0) : bk_number(args));
  }
  rep.bkd = *std::max_element(rep.entries.begin(), rep.entries.end());
  return rep;
}

}  // namespace mcc
