#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace closurelab {

/// A monomial in a fixed number of variables: just its exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int x : e_)
      if (x < 0) throw std::invalid_argument("Monomial: negative exponent");
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }

  int total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < nvars(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  /// this / o, assuming o divides this.
  Monomial divide(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < nvars(); ++i) {
      r.e_[i] -= o.e_[i];
      if (r.e_[i] < 0) throw std::invalid_argument("Monomial::divide: not divisible");
    }
    return r;
  }

  /// Componentwise max(this - o, 0); the monomial generator of (this : o).
  Monomial colon(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < nvars(); ++i) r.e_[i] = std::max(r.e_[i] - o.e_[i], 0);
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < a.nvars(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }
  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < a.nvars(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
    return r;
  }

  // canonical ordering for container keys (not a term order)
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<int> e_;
};

enum class MonomialOrder { GrevLex, Lex };

/// Term-order comparison: negative if a < b, zero if equal, positive if a > b.
inline int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
  switch (order) {
    case MonomialOrder::GrevLex: {
      int da = a.total_degree(), db = b.total_degree();
      if (da != db) return da < db ? -1 : 1;
      for (int i = a.nvars() - 1; i >= 0; --i) {
        int d = a[i] - b[i];
        if (d != 0) return d > 0 ? -1 : 1;  // last nonzero of a-b negative => a > b
      }
      return 0;
    }
    case MonomialOrder::Lex: {
      for (int i = 0; i < a.nvars(); ++i) {
        int d = a[i] - b[i];
        if (d != 0) return d > 0 ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

}  // namespace closurelab
