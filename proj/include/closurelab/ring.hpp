#pragma once

#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "closurelab/monomial.hpp"
#include "closurelab/polynomial.hpp"

namespace closurelab {

struct PolyRing {
  Field field;
  std::vector<std::string> vars;

  int nvars() const { return static_cast<int>(vars.size()); }
  bool operator==(const PolyRing&) const = default;
};

/// A quotient of a polynomial ring by an ideal generated by monomials.
struct MonomialQuotient {
  PolyRing base;
  std::vector<Monomial> quotient;  // monomial generators of the defining ideal

  bool operator==(const MonomialQuotient&) const = default;
};

/// The semigroup ring k[t^s : s in S] for a numerical semigroup
/// S = <gens>, gcd(gens) = 1. Elements are restricted to monomials t^s and
/// ideals to exponent sets, which keeps every operation exact.
struct SemigroupRing {
  Field field;
  std::vector<int> gens;

  bool operator==(const SemigroupRing&) const = default;
};

class RingDescriptor {
 public:
  RingDescriptor() : v_(PolyRing{}) {}
  RingDescriptor(PolyRing r) : v_(std::move(r)) {}
  RingDescriptor(MonomialQuotient r) : v_(std::move(r)) { validate_quotient(); }
  RingDescriptor(SemigroupRing r) : v_(std::move(r)) { validate_semigroup(); }

  bool is_poly() const { return std::holds_alternative<PolyRing>(v_); }
  bool is_quotient() const { return std::holds_alternative<MonomialQuotient>(v_); }
  bool is_semigroup() const { return std::holds_alternative<SemigroupRing>(v_); }

  const PolyRing& poly() const { return std::get<PolyRing>(v_); }
  const MonomialQuotient& quotient() const { return std::get<MonomialQuotient>(v_); }
  const SemigroupRing& semigroup() const { return std::get<SemigroupRing>(v_); }

  Field field() const {
    if (is_poly()) return poly().field;
    if (is_quotient()) return quotient().base.field;
    return semigroup().field;
  }

  /// Base polynomial ring (PolyRing/MonomialQuotient only).
  const PolyRing& base_poly() const {
    if (is_poly()) return poly();
    if (is_quotient()) return quotient().base;
    throw std::invalid_argument("ring: no base polynomial ring for semigroup rings");
  }

  int nvars() const { return base_poly().nvars(); }

  /// Defining monomials (empty for a plain polynomial ring).
  std::vector<Monomial> quotient_gens() const {
    if (is_quotient()) return quotient().quotient;
    if (is_poly()) return {};
    throw std::invalid_argument("ring: no quotient data for semigroup rings");
  }

  std::string str() const {
    std::ostringstream os;
    auto field_str = [](const Field& f) {
      return f.p == 0 ? std::string("QQ") : "Fp " + std::to_string(f.p);
    };
    if (is_poly()) {
      os << "poly " << field_str(poly().field) << " [";
      for (size_t i = 0; i < poly().vars.size(); ++i)
        os << (i ? "," : "") << poly().vars[i];
      os << "]";
    } else if (is_quotient()) {
      const auto& q = quotient();
      os << "quot " << field_str(q.base.field) << " [";
      for (size_t i = 0; i < q.base.vars.size(); ++i)
        os << (i ? "," : "") << q.base.vars[i];
      os << "] / (";
      for (size_t i = 0; i < q.quotient.size(); ++i)
        os << (i ? "," : "")
           << Polynomial::monomial(q.quotient[i], q.base.field).str(q.base.vars);
      os << ")";
    } else {
      const auto& s = semigroup();
      os << "semigroup " << field_str(s.field) << " <";
      for (size_t i = 0; i < s.gens.size(); ++i) os << (i ? "," : "") << s.gens[i];
      os << ">";
    }
    return os.str();
  }

  bool operator==(const RingDescriptor&) const = default;

 private:
  void validate_quotient() {
    const auto& q = std::get<MonomialQuotient>(v_);
    for (const auto& m : q.quotient)
      if (m.nvars() != q.base.nvars())
        throw std::invalid_argument("ring: quotient generator has wrong variable count");
  }
  void validate_semigroup() {
    const auto& s = std::get<SemigroupRing>(v_);
    if (s.gens.empty()) throw std::invalid_argument("ring: empty semigroup generators");
    int g = 0;
    for (int a : s.gens) {
      if (a <= 0) throw std::invalid_argument("ring: semigroup generators must be positive");
      g = std::gcd(g, a);
    }
    if (g != 1)
      throw std::invalid_argument("ring: semigroup generators must have gcd 1");
  }

  std::variant<PolyRing, MonomialQuotient, SemigroupRing> v_;
};

/// Minimal primes of a monomial ideal, as subsets of variable indices:
/// minimal transversals of the supports of the generators.
inline std::vector<std::set<int>> minimal_primes_monomial(
    const std::vector<Monomial>& gens, const PolyRing& ring) {
  std::vector<std::set<int>> supports;
  for (const auto& m : gens) {
    if (m.is_one())
      throw std::invalid_argument("minimal_primes_monomial: unit generator");
    std::set<int> s;
    for (int i = 0; i < m.nvars(); ++i)
      if (m[i] > 0) s.insert(i);
    supports.push_back(std::move(s));
  }
  // The zero ideal in a domain: one minimal prime, (0).
  if (supports.empty()) return {{}};

  std::vector<std::set<int>> transversals;
  std::set<int> current;
  auto extend = [&](auto&& self, size_t idx) -> void {
    if (idx == supports.size()) {
      transversals.push_back(current);
      return;
    }
    const auto& sup = supports[idx];
    bool hit = std::any_of(sup.begin(), sup.end(),
                           [&](int v) { return current.count(v) > 0; });
    if (hit) {
      self(self, idx + 1);
      return;
    }
    for (int v : sup) {
      current.insert(v);
      self(self, idx + 1);
      current.erase(v);
    }
  };
  extend(extend, 0);

  std::sort(transversals.begin(), transversals.end());
  transversals.erase(std::unique(transversals.begin(), transversals.end()),
                     transversals.end());
  std::vector<std::set<int>> minimal;
  for (const auto& t : transversals) {
    bool dominated = false;
    for (const auto& u : transversals) {
      if (u == t) continue;
      if (std::includes(t.begin(), t.end(), u.begin(), u.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(t);
  }
  return minimal;
}

/// Krull dimension of a monomial quotient, from its minimal primes.
inline int krull_dimension(const MonomialQuotient& ring) {
  auto primes = minimal_primes_monomial(ring.quotient, ring.base);
  int n = ring.base.nvars();
  size_t smallest = n + 1;
  for (const auto& p : primes) smallest = std::min(smallest, p.size());
  return n - static_cast<int>(smallest);
}

inline int krull_dimension(const RingDescriptor& ring) {
  if (ring.is_poly()) return ring.poly().nvars();
  if (ring.is_quotient()) return krull_dimension(ring.quotient());
  return 1;  // numerical semigroup rings are one-dimensional
}

inline bool is_artinian(const RingDescriptor& ring) {
  return ring.is_quotient() && krull_dimension(ring.quotient()) == 0;
}

}  // namespace closurelab
