#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "closurelab/polynomial.hpp"

namespace closurelab {

/// An element of a free module R^r, as a coordinate vector of polynomials.
class FreeVec {
 public:
  FreeVec() = default;
  FreeVec(int rank, int nvars) : coords_(rank, Polynomial(nvars)) {}
  explicit FreeVec(std::vector<Polynomial> coords) : coords_(std::move(coords)) {}

  static FreeVec unit(int rank, int i, int nvars, const Field& f) {
    FreeVec v(rank, nvars);
    v.coords_[i] = Polynomial::constant(Scalar::one(f), nvars);
    return v;
  }
  static FreeVec from_poly(const Polynomial& p) { return FreeVec({p}); }

  int rank() const { return static_cast<int>(coords_.size()); }
  int nvars() const { return coords_.empty() ? 0 : coords_[0].nvars(); }
  const Polynomial& operator[](int i) const { return coords_[i]; }
  Polynomial& operator[](int i) { return coords_[i]; }
  const std::vector<Polynomial>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& p : coords_)
      if (!p.is_zero()) return false;
    return true;
  }

  FreeVec operator+(const FreeVec& o) const {
    FreeVec r = *this;
    for (int i = 0; i < rank(); ++i) r.coords_[i] += o.coords_[i];
    return r;
  }
  FreeVec operator-(const FreeVec& o) const {
    FreeVec r = *this;
    for (int i = 0; i < rank(); ++i) r.coords_[i] -= o.coords_[i];
    return r;
  }
  FreeVec operator-() const {
    FreeVec r = *this;
    for (auto& p : r.coords_) p = -p;
    return r;
  }
  FreeVec times_term(const Monomial& m, const Scalar& c) const {
    FreeVec r = *this;
    for (auto& p : r.coords_) p = p.times_term(m, c);
    return r;
  }
  FreeVec times_poly(const Polynomial& q) const {
    FreeVec r = *this;
    for (auto& p : r.coords_) p = p * q;
    return r;
  }

  FreeVec& operator+=(const FreeVec& o) { return *this = *this + o; }
  FreeVec& operator-=(const FreeVec& o) { return *this = *this - o; }

  bool operator==(const FreeVec& o) const { return coords_ == o.coords_; }
  bool operator!=(const FreeVec& o) const { return !(*this == o); }

  /// Printed with coordinate symbols; rank-1 vectors print as plain polynomials.
  std::string str(const std::vector<std::string>& vars,
                  const std::string& coord_prefix = "e") const {
    if (rank() == 1) return coords_[0].str(vars);
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < rank(); ++i) {
      if (coords_[i].is_zero()) continue;
      std::string s = coords_[i].str(vars);
      if (!first) os << " + ";
      os << "(" << s << ")*" << coord_prefix << (i + 1);
      first = false;
    }
    if (first) return "0";
    return os.str();
  }

 private:
  std::vector<Polynomial> coords_;
};

/// A module term: a monomial sitting in one coordinate of R^r.
struct ModTerm {
  int comp;
  Monomial mono;
};

/// Position-over-term order with top-position priority: a lower component
/// index dominates; ties are broken by the monomial order.
inline int modterm_cmp(const ModTerm& a, const ModTerm& b, MonomialOrder order) {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return mono_cmp(a.mono, b.mono, order);
}

inline ModTerm leading_modterm(const FreeVec& v, MonomialOrder order) {
  for (int i = 0; i < v.rank(); ++i) {
    if (!v[i].is_zero()) return {i, v[i].leading_monomial(order)};
  }
  throw std::logic_error("FreeVec: leading term of zero vector");
}

}  // namespace closurelab
