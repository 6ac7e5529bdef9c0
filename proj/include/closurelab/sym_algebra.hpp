#pragma once

#include <algorithm>

#include "closurelab/freevec.hpp"
#include "closurelab/ring.hpp"

namespace closurelab {

/// The symmetric algebra Sym_R(F) of a free module F = R^r, flattened to a
/// polynomial ring in the base variables plus one degree-1 variable per free
/// generator. Degree here always means e-degree: the grading by the free
/// generators, under which F is the degree-1 part.
class SymAlgebraContext {
 public:
  SymAlgebraContext(RingDescriptor base, int rank)
      : base_(std::move(base)), rank_(rank) {
    if (base_.is_semigroup()) {
      base_nvars_ = 1;  // exponents live in k[t]
      base_var_names_ = {"t"};
    } else {
      base_nvars_ = base_.nvars();
      base_var_names_ = base_.base_poly().vars;
    }
    flat_vars_ = base_var_names_;
    for (int i = 1; i <= rank_; ++i) {
      std::string name = "e" + std::to_string(i);
      while (std::find(flat_vars_.begin(), flat_vars_.end(), name) !=
             flat_vars_.end())
        name = "_" + name;
      flat_vars_.push_back(name);
    }
  }

  const RingDescriptor& base() const { return base_; }
  int rank() const { return rank_; }
  int base_nvars() const { return base_nvars_; }
  int flat_nvars() const { return base_nvars_ + rank_; }
  const std::vector<std::string>& flat_vars() const { return flat_vars_; }
  const std::vector<std::string>& base_vars() const { return base_var_names_; }

  /// Base-ring polynomial, seen inside the flattened ring.
  Polynomial lift_base(const Polynomial& p) const {
    Polynomial out(flat_nvars());
    for (auto& [m, c] : p.terms()) {
      std::vector<int> e(flat_nvars(), 0);
      for (int i = 0; i < base_nvars_; ++i) e[i] = m[i];
      out.add_term(Monomial(e), c);
    }
    return out;
  }

  /// The degree-1 form of a free-module element.
  Polynomial linear_form(const FreeVec& v) const {
    if (v.rank() != rank_)
      throw std::invalid_argument("SymAlgebraContext: rank mismatch");
    Polynomial out(flat_nvars());
    for (int i = 0; i < rank_; ++i) {
      for (auto& [m, c] : v[i].terms()) {
        std::vector<int> e(flat_nvars(), 0);
        for (int k = 0; k < base_nvars_; ++k) e[k] = m[k];
        e[base_nvars_ + i] = 1;
        out.add_term(Monomial(e), c);
      }
    }
    return out;
  }

  FreeVec from_linear_form(const Polynomial& p) const {
    FreeVec v(rank_, base_nvars_);
    for (auto& [m, c] : p.terms()) {
      int which = -1;
      for (int i = 0; i < rank_; ++i) {
        int d = m[base_nvars_ + i];
        if (d == 0) continue;
        if (d > 1 || which >= 0)
          throw std::invalid_argument("SymAlgebraContext: form is not e-degree 1");
        which = i;
      }
      if (which < 0)
        throw std::invalid_argument("SymAlgebraContext: form has an e-free term");
      std::vector<int> e(base_nvars_, 0);
      for (int k = 0; k < base_nvars_; ++k) e[k] = m[k];
      v[which].add_term(Monomial(e), c);
    }
    return v;
  }

  int e_degree(const Monomial& flat_mono) const {
    int d = 0;
    for (int i = 0; i < rank_; ++i) d += flat_mono[base_nvars_ + i];
    return d;
  }

  Monomial base_part(const Monomial& flat_mono) const {
    std::vector<int> e(base_nvars_);
    for (int i = 0; i < base_nvars_; ++i) e[i] = flat_mono[i];
    return Monomial(e);
  }

  Monomial e_part(const Monomial& flat_mono) const {
    std::vector<int> e(rank_);
    for (int i = 0; i < rank_; ++i) e[i] = flat_mono[base_nvars_ + i];
    return Monomial(e);
  }

  /// Reduce modulo the base ring's defining monomial ideal, extended to the
  /// symmetric algebra: terms whose base part lies in it are dropped.
  Polynomial reduce_mod_quotient(const Polynomial& p) const {
    if (!base_.is_quotient()) return p;
    const auto& q = base_.quotient().quotient;
    Polynomial out(p.nvars());
    for (auto& [m, c] : p.terms()) {
      if (monomial_ideal_member_flat(m, q)) continue;
      out.add_term(m, c);
    }
    return out;
  }

  /// All e-monomials of the given e-degree (deterministic order), as flat
  /// monomials with trivial base part.
  std::vector<Monomial> e_monomials(int degree) const {
    std::vector<Monomial> out;
    std::vector<int> e(flat_nvars(), 0);
    auto walk = [&](auto&& self, int var, int remaining) -> void {
      if (var == rank_ - 1) {
        e[base_nvars_ + var] = remaining;
        out.push_back(Monomial(e));
        e[base_nvars_ + var] = 0;
        return;
      }
      for (int d = remaining; d >= 0; --d) {
        e[base_nvars_ + var] = d;
        self(self, var + 1, remaining - d);
      }
      e[base_nvars_ + var] = 0;
    };
    if (rank_ == 0) return out;
    walk(walk, 0, degree);
    return out;
  }

  /// Split a flat polynomial of pure e-degree n over the e-monomial basis,
  /// as a vector of base-ring polynomials.
  FreeVec flatten_component(const Polynomial& p, int degree,
                            const std::vector<Monomial>& basis) const {
    std::map<Monomial, int> index;
    for (size_t i = 0; i < basis.size(); ++i)
      index[e_part(basis[i])] = static_cast<int>(i);
    FreeVec v(static_cast<int>(basis.size()), base_nvars_);
    for (auto& [m, c] : p.terms()) {
      if (e_degree(m) != degree)
        throw std::invalid_argument("flatten_component: mixed e-degrees");
      v[index.at(e_part(m))].add_term(base_part(m), c);
    }
    return v;
  }

 private:
  bool monomial_ideal_member_flat(const Monomial& flat_mono,
                                  const std::vector<Monomial>& q) const {
    for (const auto& g : q) {
      bool div = true;
      for (int i = 0; i < base_nvars_; ++i)
        if (g[i] > flat_mono[i]) {
          div = false;
          break;
        }
      if (div) return true;
    }
    return false;
  }

  RingDescriptor base_;
  int rank_;
  int base_nvars_;
  std::vector<std::string> base_var_names_;
  std::vector<std::string> flat_vars_;
};

}  // namespace closurelab
