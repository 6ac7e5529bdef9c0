#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "closurelab/monomial.hpp"
#include "closurelab/scalar.hpp"

namespace closurelab {

/// Sparse exact-coefficient multivariate polynomial. Terms are kept in a
/// canonical ordered map (no zero coefficients stored), so equality and
/// printing are deterministic regardless of how a value was computed.
class Polynomial {
 public:
  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(const Scalar& c, int nvars) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_[Monomial(nvars)] = c;
    return p;
  }
  static Polynomial term(const Monomial& m, const Scalar& c) {
    Polynomial p(m.nvars());
    if (!c.is_zero()) p.terms_[m] = c;
    return p;
  }
  static Polynomial monomial(const Monomial& m, const Field& f) {
    return term(m, Scalar::one(f));
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }

  bool is_monomial() const { return terms_.size() == 1; }
  /// Sole term of a monomial (single-term) polynomial.
  const std::pair<const Monomial, Scalar>& only_term() const {
    if (!is_monomial()) throw std::logic_error("Polynomial: not a single term");
    return *terms_.begin();
  }

  int total_degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
  }

  void add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  Polynomial operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }
  Polynomial operator-() const {
    Polynomial r(nvars_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  Polynomial operator*(const Polynomial& o) const {
    Polynomial r(nvars_);
    for (auto& [m1, c1] : terms_)
      for (auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
  }
  Polynomial scaled(const Scalar& c) const {
    Polynomial r(nvars_);
    if (c.is_zero()) return r;
    for (auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
  }
  Polynomial times_term(const Monomial& m, const Scalar& c) const {
    Polynomial r(nvars_);
    if (c.is_zero()) return r;
    for (auto& [mm, cc] : terms_) r.terms_.emplace(mm * m, cc * c);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
  bool operator<(const Polynomial& o) const {  // container ordering only
    if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size();
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    for (; i != terms_.end(); ++i, ++j) {
      if (i->first != j->first) return i->first < j->first;
      if (!(i->second == j->second)) return i->second.value() < j->second.value();
    }
    return false;
  }

  /// Leading monomial under the given term order.
  const Monomial& leading_monomial(MonomialOrder order) const {
    if (is_zero()) throw std::logic_error("Polynomial: leading term of zero");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (mono_cmp(it->first, best->first, order) > 0) best = it;
    return best->first;
  }
  const Scalar& leading_coefficient(MonomialOrder order) const {
    return terms_.at(leading_monomial(order));
  }

  Polynomial pow(int n) const {
    if (n < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
    Polynomial r = constant(Scalar::from_int(1, field_hint()), nvars_);
    Polynomial base = *this;
    while (n > 0) {
      if (n & 1) r = r * base;
      base = base * base;
      n >>= 1;
    }
    return r;
  }

  /// Field of the coefficients (rational if the polynomial is 0).
  Field field_hint() const {
    if (terms_.empty()) return Field{};
    return Field{terms_.begin()->second.characteristic()};
  }

  std::string str(const std::vector<std::string>& vars) const {
    if (is_zero()) return "0";
    // print highest grevlex term first
    std::vector<const std::pair<const Monomial, Scalar>*> ts;
    for (auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
      return mono_cmp(a->first, b->first, MonomialOrder::GrevLex) > 0;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
      const auto& [m, c] = *t;
      BigRat v = c.value();
      bool neg = v < 0;
      BigRat av = neg ? BigRat(-v) : v;
      if (first) {
        if (neg) os << "-";
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      std::string coeff = av.str();
      if (m.is_one()) {
        os << coeff;
      } else {
        bool need_star = false;
        if (coeff != "1") {
          os << coeff;
          need_star = true;
        }
        for (int i = 0; i < m.nvars(); ++i) {
          if (m[i] == 0) continue;
          if (need_star) os << "*";
          os << vars[i];
          if (m[i] > 1) os << "^" << m[i];
          need_star = true;
        }
      }
    }
    return os.str();
  }

 private:
  std::map<Monomial, Scalar> terms_;
  int nvars_;
};

}  // namespace closurelab
