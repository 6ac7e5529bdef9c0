// Test-only oracles, kept independent of the implementation paths they
// cross-check.
#pragma once

#include <deque>

#include "closurelab/polynomial.hpp"
#include "closurelab/ring.hpp"

namespace closurelab::oracles {

// A deliberately naive Buchberger: no pair criteria, FIFO pair queue,
// leading-term-only reduction, interreduction at the very end. Slow and
// simple on purpose.
inline Polynomial naive_reduce(Polynomial p, const std::vector<Polynomial>& basis,
                               MonomialOrder order) {
  Polynomial rem(p.nvars());
  while (!p.is_zero()) {
    Monomial lm = p.leading_monomial(order);
    Scalar lc = p.terms().at(lm);
    bool hit = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      Monomial gm = g.leading_monomial(order);
      if (!gm.divides(lm)) continue;
      p -= g.times_term(lm.divide(gm), lc / g.terms().at(gm));
      hit = true;
      break;
    }
    if (!hit) {
      rem.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return rem;
}

inline std::vector<Polynomial> naive_groebner(std::vector<Polynomial> gens,
                                              MonomialOrder order) {
  std::vector<Polynomial> basis;
  for (const auto& g : gens)
    if (!g.is_zero()) basis.push_back(g);
  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.push_back({i, j});
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    Monomial mi = basis[i].leading_monomial(order);
    Monomial mj = basis[j].leading_monomial(order);
    Monomial l = Monomial::lcm(mi, mj);
    Polynomial s =
        basis[i].times_term(l.divide(mi), basis[i].terms().at(mi).inverse()) -
        basis[j].times_term(l.divide(mj), basis[j].terms().at(mj).inverse());
    Polynomial nf = naive_reduce(s, basis, order);
    if (nf.is_zero()) continue;
    for (size_t k = 0; k < basis.size(); ++k) pairs.push_back({k, basis.size()});
    basis.push_back(nf);
  }
  // reduce to the canonical reduced basis
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < basis.size(); ++i) {
    Monomial mi = basis[i].leading_monomial(order);
    bool redundant = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      Monomial mj = basis[j].leading_monomial(order);
      if (mj.divides(mi) && !(mj == mi && j > i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) reduced.push_back(basis[i]);
  }
  for (size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    Polynomial nf = naive_reduce(reduced[i], others, order);
    reduced[i] = nf.scaled(nf.leading_coefficient(order).inverse());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return mono_cmp(a.leading_monomial(order), b.leading_monomial(order), order) > 0;
  });
  return reduced;
}

// Brute-force radical membership when some power of p falls in the ideal:
// checks p^e for e up to the bound with plain normal forms.
inline bool power_in_ideal(const Polynomial& p, const std::vector<Polynomial>& basis,
                           MonomialOrder order, int max_power) {
  Polynomial q = p;
  for (int e = 1; e <= max_power; ++e) {
    if (naive_reduce(q, basis, order).is_zero()) return true;
    q = q * p;
  }
  return false;
}

}  // namespace closurelab::oracles
