#pragma once

#include <optional>

#include "closurelab/semigroup.hpp"
#include "closurelab/sym_algebra.hpp"

namespace closurelab {

/// One summand of a certificate coefficient: a base-ring polynomial times a
/// j-fold product of the named generators.
struct CertTerm {
  std::vector<int> gen_indices;  // sorted multiset of generator positions
  Polynomial coeff;              // over the base variables
};

/// The j-th coefficient a_j of an integrality equation, expanded as an
/// R-combination of j-fold products of generators.
struct DegreeCoeff {
  int power = 0;  // j
  std::vector<CertTerm> terms;
};

/// An explicit homogeneous equation of integrality
///   y^n + a_1 y^{n-1} + ... + a_n = 0
/// in the symmetric algebra of R^rank, with every a_j carried as an explicit
/// R-combination of j-fold products of the generators it is integral over.
/// The whole point of this object is that it re-verifies by pure expansion.
struct IntegralityCertificate {
  RingDescriptor ring;
  int rank = 1;
  FreeVec element;                  // y
  std::vector<FreeVec> generators;  // the closed-over generators (rank-1: ideal gens)
  int degree = 1;                   // n
  std::vector<DegreeCoeff> coefficients;  // one entry per j = 1..n
};

/// Re-check a certificate by expansion: no search and no Groebner bases,
/// just polynomial arithmetic and (for quotient rings) dropping terms that
/// lie in the defining monomial ideal. Also enforces the shape constraint
/// that a_j uses exactly j-fold products.
inline bool verify_certificate(const IntegralityCertificate& cert,
                               std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (cert.degree < 1) return fail("degree must be at least 1");
  SymAlgebraContext ctx(cert.ring, cert.rank);
  std::vector<Polynomial> gen_forms;
  for (const auto& g : cert.generators) gen_forms.push_back(ctx.linear_form(g));
  Polynomial y = ctx.linear_form(cert.element);
  Polynomial total = y.pow(cert.degree);
  for (const auto& dc : cert.coefficients) {
    if (dc.power < 1 || dc.power > cert.degree) return fail("coefficient power out of range");
    Polynomial a_j(ctx.flat_nvars());
    for (const auto& t : dc.terms) {
      if (static_cast<int>(t.gen_indices.size()) != dc.power)
        return fail("a_j term is not a j-fold product");
      Polynomial prod = ctx.lift_base(t.coeff);
      for (int idx : t.gen_indices) {
        if (idx < 0 || idx >= static_cast<int>(gen_forms.size()))
          return fail("generator index out of range");
        prod = prod * gen_forms[idx];
      }
      a_j += prod;
    }
    total += a_j * y.pow(cert.degree - dc.power);
  }
  total = ctx.reduce_mod_quotient(total);
  if (cert.ring.is_semigroup()) {
    // coefficients and element must live in the semigroup ring itself
    NumericalSemigroup S(cert.ring.semigroup().gens);
    auto check_in_ring = [&](const Polynomial& base_poly) {
      for (auto& [m, c] : base_poly.terms())
        if (!S.contains(m[0])) return false;
      return true;
    };
    for (const auto& dc : cert.coefficients)
      for (const auto& t : dc.terms)
        if (!check_in_ring(t.coeff)) return fail("coefficient not in the semigroup ring");
    for (const auto& g : cert.generators)
      for (const auto& p : g.coords())
        if (!check_in_ring(p)) return fail("generator not in the semigroup ring");
    for (const auto& p : cert.element.coords())
      if (!check_in_ring(p)) return fail("element not in the semigroup ring");
  }
  if (!total.is_zero()) return fail("expansion is nonzero");
  return true;
}

}  // namespace closurelab
