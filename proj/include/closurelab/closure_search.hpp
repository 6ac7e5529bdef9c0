#pragma once

#include <optional>

#include "closurelab/certificate.hpp"
#include "closurelab/groebner.hpp"
#include "closurelab/semigroup.hpp"
#include "closurelab/sym_algebra.hpp"

namespace closurelab {

struct ClosureSearchResult {
  bool found = false;
  std::optional<IntegralityCertificate> certificate;
};

namespace detail {

/// A multigrading on the flattened symmetric algebra: each e-variable gets a
/// weight vector in N^d (d = base variables, which keep their unit weights).
/// When one exists that makes every generator form and the probe element
/// homogeneous, the certificate search collapses to exact linear algebra in
/// a single graded component.
struct EGrading {
  bool ok = false;
  std::vector<std::vector<long>> weights;  // one vector per e-variable
};

inline EGrading infer_grading(const SymAlgebraContext& ctx,
                              const std::vector<Polynomial>& forms) {
  const int d = ctx.base_nvars(), r = ctx.rank();
  EGrading g;
  g.weights.assign(r, {});
  std::vector<int> component(r, -1);

  // collect difference constraints W[i2] - W[i1] = alpha1 - alpha2
  struct Edge {
    int a, b;
    std::vector<long> offset;  // W[b] = W[a] + offset
  };
  std::vector<Edge> edges;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    std::optional<std::pair<int, std::vector<long>>> first;
    for (auto& [m, c] : f.terms()) {
      int evar = -1;
      for (int i = 0; i < r; ++i)
        if (m[d + i] > 0) {
          if (m[d + i] > 1 || evar >= 0) return {};  // not e-degree 1
          evar = i;
        }
      if (evar < 0) return {};
      std::vector<long> alpha(d);
      for (int i = 0; i < d; ++i) alpha[i] = m[i];
      if (!first) {
        first = {evar, alpha};
      } else {
        std::vector<long> off(d);
        for (int i = 0; i < d; ++i) off[i] = first->second[i] - alpha[i];
        edges.push_back({first->first, evar, std::move(off)});
      }
    }
  }

  // propagate weights over the constraint graph, one component at a time
  std::vector<std::vector<std::pair<int, std::vector<long>>>> adj(r);
  for (const auto& e : edges) {
    adj[e.a].push_back({e.b, e.offset});
    std::vector<long> neg(d);
    for (int i = 0; i < d; ++i) neg[i] = -e.offset[i];
    adj[e.b].push_back({e.a, neg});
  }
  for (int root = 0; root < r; ++root) {
    if (component[root] >= 0) continue;
    std::vector<int> stack{root};
    std::vector<int> members;
    component[root] = root;
    g.weights[root].assign(d, 0);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (const auto& [w, off] : adj[v]) {
        std::vector<long> cand(d);
        for (int i = 0; i < d; ++i) cand[i] = g.weights[v][i] + off[i];
        if (component[w] < 0) {
          component[w] = root;
          g.weights[w] = cand;
          stack.push_back(w);
        } else if (g.weights[w] != cand) {
          return {};  // inconsistent: no such grading
        }
      }
    }
    // shift the component so all weights are componentwise nonnegative
    std::vector<long> shift(d, 0);
    for (int v : members)
      for (int i = 0; i < d; ++i) shift[i] = std::min(shift[i], g.weights[v][i]);
    for (int v : members)
      for (int i = 0; i < d; ++i) g.weights[v][i] -= shift[i];
  }
  g.ok = true;
  return g;
}

inline std::vector<long> form_bidegree(const SymAlgebraContext& ctx,
                                       const EGrading& g, const Polynomial& form) {
  const int d = ctx.base_nvars(), r = ctx.rank();
  for (auto& [m, c] : form.terms()) {
    for (int i = 0; i < r; ++i)
      if (m[d + i] > 0) {
        std::vector<long> deg(d);
        for (int k = 0; k < d; ++k) deg[k] = m[k] + g.weights[i][k];
        return deg;
      }
  }
  throw std::logic_error("form_bidegree: zero form");
}

/// Incremental exact Gaussian elimination over sparse columns keyed by flat
/// monomials; remembers, for each pivot, its expression in original columns.
class SparseSolver {
 public:
  using Col = std::map<Monomial, Scalar>;

  void add_column(int id, Col col) {
    std::map<int, Scalar> combo{{id, Scalar::from_rational(BigRat(1), field_)}};
    reduce(col, combo);
    if (col.empty()) return;
    auto pivot = std::prev(col.end());
    Scalar inv = pivot->second.inverse();
    for (auto& [m, c] : col) c *= inv;
    for (auto& [i, c] : combo) c *= inv;
    pivots_.push_back({pivot->first, std::move(col), std::move(combo)});
  }

  void set_field(const Field& f) { field_ = f; }

  /// If b lies in the span of the added columns, return coefficients per
  /// original column id.
  std::optional<std::map<int, Scalar>> solve(Col b) const {
    std::map<int, Scalar> combo;
    reduce(b, combo);
    if (!b.empty()) return std::nullopt;
    for (auto& [i, c] : combo) c = -c;
    return combo;
  }

 private:
  struct Pivot {
    Monomial mono;
    Col col;
    std::map<int, Scalar> combo;
  };

  void reduce(Col& col, std::map<int, Scalar>& combo) const {
    bool changed = true;
    while (changed && !col.empty()) {
      changed = false;
      for (const auto& p : pivots_) {
        auto it = col.find(p.mono);
        if (it == col.end()) continue;
        Scalar f = it->second;
        for (auto& [m, c] : p.col) {
          auto jt = col.find(m);
          if (jt == col.end()) {
            col.emplace(m, -(c * f));
          } else {
            jt->second -= c * f;
            if (jt->second.is_zero()) col.erase(jt);
          }
        }
        for (auto& [i, c] : p.combo) {
          auto jt = combo.find(i);
          if (jt == combo.end()) {
            combo.emplace(i, -(c * f));
          } else {
            jt->second -= c * f;
            if (jt->second.is_zero()) combo.erase(jt);
          }
        }
        changed = true;
      }
    }
  }

  Field field_;
  std::vector<Pivot> pivots_;
};

struct ProductColumn {
  int power = 0;                 // j
  std::vector<int> gen_indices;  // multiset
  Monomial multiplier;           // base-variable monomial (graded route only)
};

inline IntegralityCertificate assemble_certificate(
    const RingDescriptor& ring, int rank, const FreeVec& y,
    const std::vector<FreeVec>& gens, int degree,
    const std::vector<std::pair<ProductColumn, Polynomial>>& contributions) {
  IntegralityCertificate cert;
  cert.ring = ring;
  cert.rank = rank;
  cert.element = y;
  cert.generators = gens;
  cert.degree = degree;
  cert.coefficients.resize(degree);
  for (int j = 1; j <= degree; ++j) cert.coefficients[j - 1].power = j;
  for (const auto& [pc, coeff] : contributions) {
    if (coeff.is_zero()) continue;
    cert.coefficients[pc.power - 1].terms.push_back({pc.gen_indices, coeff});
  }
  return cert;
}

}  // namespace detail

/// Searches for an integrality equation of y over the submodule generated by
/// K inside Sym(R^rank), of degree at most max_degree. The search at each
/// degree n is complete: a certificate of degree exactly <= n exists iff one
/// is found, so a negative answer means no such equation exists up to the
/// bound (which is still inconclusive about the full integral closure).
inline ClosureSearchResult free_closure_member(const FreeVec& y,
                                               const std::vector<FreeVec>& K,
                                               int max_degree,
                                               const RingDescriptor& ring) {
  if (ring.is_semigroup())
    throw std::invalid_argument(
        "free_closure_member: semigroup rings use exponent-set closures");
  if (max_degree < 1) throw std::invalid_argument("free_closure_member: max_degree < 1");
  const int rank = y.rank();
  std::vector<FreeVec> gens;
  for (const auto& g : K) {
    if (g.rank() != rank)
      throw std::invalid_argument("free_closure_member: rank mismatch");
    if (!g.is_zero()) gens.push_back(g);
  }

  SymAlgebraContext ctx(ring, rank);
  const Field field = ring.field();

  auto finish = [&](IntegralityCertificate cert) {
    std::string why;
    if (!verify_certificate(cert, &why))
      throw std::logic_error("free_closure_member: produced certificate fails: " + why);
    ClosureSearchResult res;
    res.found = true;
    res.certificate = std::move(cert);
    return res;
  };

  if (y.is_zero())
    return finish(detail::assemble_certificate(ring, rank, y, gens, 1, {}));

  Polynomial y_form = ctx.linear_form(y);
  std::vector<Polynomial> forms;
  for (const auto& g : gens) forms.push_back(ctx.linear_form(g));

  std::vector<Polynomial> all_forms = forms;
  all_forms.push_back(y_form);
  detail::EGrading grading = detail::infer_grading(ctx, all_forms);

  const int m = static_cast<int>(forms.size());
  std::vector<Polynomial> y_pow{Polynomial::constant(Scalar::one(field), ctx.flat_nvars())};
  for (int i = 1; i <= max_degree; ++i) y_pow.push_back(y_pow.back() * y_form);

  for (int n = 1; n <= max_degree; ++n) {
    Polynomial rhs = ctx.reduce_mod_quotient(y_pow[n]);
    if (rhs.is_zero())  // y^n vanishes in the quotient: all-zero coefficients
      return finish(detail::assemble_certificate(ring, rank, y, gens, n, {}));

    if (grading.ok) {
      // graded route: restrict to the single multidegree n * deg(y)
      std::vector<long> ydeg = detail::form_bidegree(ctx, grading, y_form);
      const int d = ctx.base_nvars();
      std::vector<std::vector<long>> fdeg;
      for (const auto& f : forms) fdeg.push_back(detail::form_bidegree(ctx, grading, f));

      detail::SparseSolver solver;
      solver.set_field(field);
      std::vector<detail::ProductColumn> columns;
      detail::SparseSolver::Col b;
      for (auto& [mm, c] : rhs.terms()) b.emplace(mm, -c);

      auto try_solve = [&]() -> std::optional<ClosureSearchResult> {
        auto sol = solver.solve(b);
        if (!sol) return std::nullopt;
        std::vector<std::pair<detail::ProductColumn, Polynomial>> contributions;
        for (auto& [id, c] : *sol) {
          const auto& pc = columns[id];
          contributions.push_back({pc, Polynomial::term(pc.multiplier, c)});
        }
        return finish(detail::assemble_certificate(ring, rank, y, gens, n, contributions));
      };

      for (int j = 1; j <= n; ++j) {
        std::vector<long> target(d);
        for (int i = 0; i < d; ++i) target[i] = static_cast<long>(j) * ydeg[i];
        // multisets of j generator forms with componentwise bidegree <= target
        std::vector<int> chosen;
        std::vector<long> partial(d, 0);
        auto dfs = [&](auto&& self, int start, Polynomial prod) -> void {
          if (static_cast<int>(chosen.size()) == j) {
            std::vector<int> gap_e(d);
            for (int i = 0; i < d; ++i)
              gap_e[i] = static_cast<int>(target[i] - partial[i]);
            Monomial gap{gap_e};
            Polynomial col_poly = ctx.reduce_mod_quotient(
                prod.times_term(ctx.lift_base(Polynomial::monomial(gap, field))
                                    .only_term()
                                    .first,
                                Scalar::one(field)) *
                y_pow[n - j]);
            if (col_poly.is_zero()) return;
            detail::ProductColumn pc{j, chosen, gap};
            int id = static_cast<int>(columns.size());
            columns.push_back(pc);
            detail::SparseSolver::Col col;
            for (auto& [mm, c] : col_poly.terms()) col.emplace(mm, c);
            solver.add_column(id, std::move(col));
            return;
          }
          for (int i = start; i < m; ++i) {
            bool fits = true;
            for (int k = 0; k < d; ++k)
              if (partial[k] + fdeg[i][k] > target[k]) {
                fits = false;
                break;
              }
            if (!fits) continue;
            for (int k = 0; k < d; ++k) partial[k] += fdeg[i][k];
            chosen.push_back(i);
            self(self, i, prod * forms[i]);
            chosen.pop_back();
            for (int k = 0; k < d; ++k) partial[k] -= fdeg[i][k];
          }
        };
        dfs(dfs, 0, Polynomial::constant(Scalar::one(field), ctx.flat_nvars()));
        if (auto res = try_solve()) return *res;
      }
      continue;  // next n
    }

    // fallback route: exact module membership in the e-degree-n component
    std::vector<Monomial> basis = ctx.e_monomials(n);
    std::vector<FreeVec> mod_gens;
    std::vector<detail::ProductColumn> columns;
    for (int j = 1; j <= n; ++j) {
      std::vector<int> chosen;
      auto dfs = [&](auto&& self, int start, Polynomial prod) -> void {
        if (static_cast<int>(chosen.size()) == j) {
          Polynomial p = prod * y_pow[n - j];
          columns.push_back({j, chosen, Monomial(ctx.base_nvars())});
          mod_gens.push_back(ctx.flatten_component(p, n, basis));
          return;
        }
        for (int i = start; i < m; ++i) {
          chosen.push_back(i);
          self(self, i, prod * forms[i]);
          chosen.pop_back();
        }
      };
      dfs(dfs, 0, Polynomial::constant(Scalar::one(field), ctx.flat_nvars()));
    }
    FreeVec target_vec = ctx.flatten_component(y_pow[n], n, basis);
    auto witness = module_member_witness(target_vec, mod_gens, ring);
    if (witness.member) {
      std::vector<std::pair<detail::ProductColumn, Polynomial>> contributions;
      for (size_t i = 0; i < columns.size(); ++i)
        contributions.push_back({columns[i], -witness.coeffs[i]});
      return finish(
          detail::assemble_certificate(ring, rank, y, gens, n, contributions));
    }
  }
  return {};
}

/// Ideal-level certificate search; rank-1 case of the free module search.
inline ClosureSearchResult certify_ideal_member(const Polynomial& z,
                                                const std::vector<Polynomial>& I,
                                                int max_degree,
                                                const RingDescriptor& ring) {
  return free_closure_member(FreeVec::from_poly(z), as_vectors(I), max_degree, ring);
}

/// Direct certificate construction over a semigroup ring: exponents u in the
/// closure of I admit an equation (t^u)^n = t^{nu-s} * (product of n
/// generators); the search runs over generator multisets.
inline ClosureSearchResult certify_semigroup_member(int u,
                                                    const std::vector<int>& ideal_gens,
                                                    int max_degree,
                                                    const SemigroupRing& ring) {
  NumericalSemigroup S(ring.gens);
  if (!S.contains(u))
    throw std::invalid_argument("certify_semigroup_member: exponent not in S");
  RingDescriptor rd{ring};
  Field field = ring.field;
  auto t_mono = [&](int s) { return Monomial(std::vector<int>{s}); };
  std::vector<FreeVec> gens;
  for (int s : ideal_gens)
    gens.push_back(FreeVec::from_poly(Polynomial::monomial(t_mono(s), field)));
  FreeVec y = FreeVec::from_poly(Polynomial::monomial(t_mono(u), field));

  const int m = static_cast<int>(ideal_gens.size());
  for (int n = 1; n <= max_degree; ++n) {
    for (int j = 1; j <= n; ++j) {
      // multisets of j generators with sum <= j*u and j*u - sum in S
      std::vector<int> chosen;
      std::optional<std::vector<int>> hit;
      auto dfs = [&](auto&& self, int start, long sum) -> void {
        if (hit) return;
        if (static_cast<int>(chosen.size()) == j) {
          long gap = static_cast<long>(j) * u - sum;
          if (gap >= 0 && S.contains(gap)) hit = chosen;
          return;
        }
        for (int i = start; i < m; ++i) {
          chosen.push_back(i);
          self(self, i, sum + ideal_gens[i]);
          chosen.pop_back();
          if (hit) return;
        }
      };
      dfs(dfs, 0, 0);
      if (hit) {
        long sum = 0;
        for (int i : *hit) sum += ideal_gens[i];
        long gap = static_cast<long>(j) * u - sum;
        IntegralityCertificate cert;
        cert.ring = rd;
        cert.rank = 1;
        cert.element = y;
        cert.generators = gens;
        cert.degree = n;
        cert.coefficients.resize(n);
        for (int jj = 1; jj <= n; ++jj) cert.coefficients[jj - 1].power = jj;
        Polynomial coeff = Polynomial::term(t_mono(static_cast<int>(gap)),
                                            -Scalar::one(field));
        cert.coefficients[j - 1].terms.push_back({*hit, coeff});
        std::string why;
        if (!verify_certificate(cert, &why))
          throw std::logic_error("certify_semigroup_member: bad certificate: " + why);
        ClosureSearchResult res;
        res.found = true;
        res.certificate = std::move(cert);
        return res;
      }
    }
  }
  return {};
}

}  // namespace closurelab
