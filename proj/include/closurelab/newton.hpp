#pragma once

#include <array>
#include <numeric>

#include "closurelab/groebner.hpp"
#include "closurelab/ring.hpp"

namespace closurelab {

/// Phase-I simplex (Bland's rule, exact rationals): decides feasibility of
/// { x >= 0 : A x = b } for b >= 0.
inline bool lp_feasible(std::vector<std::vector<BigRat>> A, std::vector<BigRat> b) {
  const size_t m = A.size();
  if (m == 0) return true;
  const size_t n = A[0].size();
  // tableau with m artificial columns appended, then the rhs
  std::vector<std::vector<BigRat>> T(m, std::vector<BigRat>(n + m + 1, BigRat(0)));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][n + m] = b[i];
  }
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = n + i;
  // objective: minimize sum of artificials; reduced-cost row
  std::vector<BigRat> z(n + m + 1, BigRat(0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j <= n + m; ++j) z[j] -= T[i][j];
  for (size_t i = 0; i < m; ++i) z[n + i] = 0;

  while (true) {
    size_t enter = n + m;
    for (size_t j = 0; j < n + m; ++j)
      if (z[j] < 0) {
        enter = j;
        break;  // Bland: smallest index
      }
    if (enter == n + m) break;
    size_t leave = m;
    BigRat best;
    for (size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      BigRat ratio = T[i][n + m] / T[i][enter];
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded in phase I cannot happen; be safe
    BigRat piv = T[leave][enter];
    for (size_t j = 0; j <= n + m; ++j) T[leave][j] /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      BigRat f = T[i][enter];
      for (size_t j = 0; j <= n + m; ++j) T[i][j] -= f * T[leave][j];
    }
    if (z[enter] != 0) {
      BigRat f = z[enter];
      for (size_t j = 0; j <= n + m; ++j) z[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  return z[n + m] == 0;  // objective value is -z(rhs)
}

/// conv(generator exponents) + nonnegative orthant. Integer-point
/// membership is decided by exact rational linear programming; in two
/// variables a half-space (facet) description is derived as well.
class NewtonRegion {
 public:
  explicit NewtonRegion(std::vector<Monomial> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) throw std::invalid_argument("NewtonRegion: zero ideal");
    dim_ = gens_[0].nvars();
    if (dim_ == 2) derive_facets_2d();
  }

  int dim() const { return dim_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  /// Facets a*X + b*Y >= c, only derived in two variables.
  const std::vector<std::array<long, 3>>& facets() const { return facets2d_; }

  bool contains(const Monomial& v) const {
    if (dim_ == 2) {
      for (const auto& [a, b, c] : facets2d_)
        if (static_cast<long>(a) * v[0] + static_cast<long>(b) * v[1] < c)
          return false;
      return true;
    }
    return contains_lp(v);
  }

  /// Membership by LP feasibility: exists lambda >= 0, sum lambda = 1,
  /// sum lambda_i g_i <= v. Usable in any dimension (cross-checks facets).
  bool contains_lp(const Monomial& v) const {
    const size_t m = gens_.size();
    // variables: lambda_1..lambda_m, slack_1..slack_d
    std::vector<std::vector<BigRat>> A(dim_ + 1,
                                       std::vector<BigRat>(m + dim_, BigRat(0)));
    std::vector<BigRat> b(dim_ + 1);
    for (int r = 0; r < dim_; ++r) {
      for (size_t j = 0; j < m; ++j) A[r][j] = gens_[j][r];
      A[r][m + r] = 1;
      b[r] = v[r];
    }
    for (size_t j = 0; j < m; ++j) A[dim_][j] = 1;
    b[dim_] = 1;
    return lp_feasible(std::move(A), std::move(b));
  }

 private:
  void derive_facets_2d() {
    // Pareto frontier of the exponents, sorted by x ascending
    std::vector<std::pair<long, long>> pts;
    for (const auto& g : gens_) pts.push_back({g[0], g[1]});
    std::sort(pts.begin(), pts.end());
    std::vector<std::pair<long, long>> frontier;
    for (const auto& p : pts) {
      bool dominated = false;
      for (const auto& q : pts)
        if (q != p && q.first <= p.first && q.second <= p.second) {
          dominated = true;
          break;
        }
      if (!dominated && (frontier.empty() || frontier.back() != p))
        frontier.push_back(p);
    }
    // lower-left convex chain
    std::vector<std::pair<long, long>> hull;
    auto cross = [](std::pair<long, long> o, std::pair<long, long> a,
                    std::pair<long, long> b) {
      return (a.first - o.first) * (b.second - o.second) -
             (a.second - o.second) * (b.first - o.first);
    };
    for (const auto& p : frontier) {
      while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
        hull.pop_back();
      hull.push_back(p);
    }
    facets2d_.clear();
    facets2d_.push_back({1, 0, hull.front().first});   // X >= min x
    facets2d_.push_back({0, 1, hull.back().second});   // Y >= min y
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
      auto [x1, y1] = hull[i];
      auto [x2, y2] = hull[i + 1];
      long a = y1 - y2, b = x2 - x1;
      long c = a * x1 + b * y1;
      long g = std::gcd(std::gcd(a, b), c);
      if (g > 1) a /= g, b /= g, c /= g;
      facets2d_.push_back({a, b, c});
    }
  }

  std::vector<Monomial> gens_;
  int dim_;
  std::vector<std::array<long, 3>> facets2d_;
};

/// Integral closure of a monomial ideal: the minimal monomial generators of
/// the set of lattice points of its Newton region. The closure of the zero
/// ideal is zero.
inline std::vector<Monomial> newton_closure(const std::vector<Monomial>& I,
                                            const PolyRing& ring) {
  std::vector<Monomial> gens;
  for (const auto& m : I) gens.push_back(m);
  gens = minimalize_monomial_ideal(std::move(gens));
  if (gens.empty()) return {};
  NewtonRegion region(gens);
  int d = ring.nvars();
  // minimal lattice generators live in the componentwise bounding box
  std::vector<int> box(d, 0);
  for (const auto& g : gens)
    for (int i = 0; i < d; ++i) box[i] = std::max(box[i], g[i]);
  std::vector<Monomial> points;
  std::vector<int> cur(d, 0);
  auto walk = [&](auto&& self, int i) -> void {
    if (i == d) {
      Monomial m{cur};
      if (region.contains(m)) points.push_back(m);
      return;
    }
    for (cur[i] = 0; cur[i] <= box[i]; ++cur[i]) self(self, i + 1);
    cur[i] = 0;
  };
  walk(walk, 0);
  return minimalize_monomial_ideal(std::move(points));
}

inline std::vector<Monomial> newton_closure(const std::vector<Polynomial>& I,
                                            const PolyRing& ring) {
  std::vector<Monomial> gens;
  for (const auto& p : I) {
    if (p.is_zero()) continue;
    if (!p.is_monomial())
      throw std::invalid_argument("newton_closure: non-monomial generator");
    gens.push_back(p.only_term().first);
  }
  return newton_closure(gens, ring);
}

/// closure(J) == closure(I) with J contained in I, both monomial.
inline bool is_reduction_monomial(const std::vector<Monomial>& J,
                                  const std::vector<Monomial>& I,
                                  const PolyRing& ring) {
  for (const auto& g : J)
    if (!monomial_ideal_member(g, I))
      throw std::invalid_argument("is_reduction: J is not contained in I");
  return newton_closure(J, ring) == newton_closure(I, ring);
}

}  // namespace closurelab
