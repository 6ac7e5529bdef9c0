#pragma once

#include "closurelab/module_closure.hpp"
#include "closurelab/newton.hpp"
#include "closurelab/semigroup.hpp"

namespace closurelab {

/// Kernel basis of a matrix over the coefficient field (exact Gauss).
inline std::vector<std::vector<Scalar>> kernel_basis(
    std::vector<std::vector<Scalar>> A, int cols, const Field& field) {
  const int rows = static_cast<int>(A.size());
  std::vector<int> pivot_col_of_row(rows, -1);
  std::vector<bool> col_is_pivot(cols, false);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!A[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[r], A[piv]);
    Scalar inv = A[r][c].inverse();
    for (int j = 0; j < cols; ++j) A[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || A[i][c].is_zero()) continue;
      Scalar f = A[i][c];
      for (int j = 0; j < cols; ++j) A[i][j] -= f * A[r][j];
    }
    pivot_col_of_row[r] = c;
    col_is_pivot[c] = true;
    ++r;
  }
  std::vector<std::vector<Scalar>> kernel;
  for (int c = 0; c < cols; ++c) {
    if (col_is_pivot[c]) continue;
    std::vector<Scalar> v(cols, Scalar::zero(field));
    v[c] = Scalar::one(field);
    for (int i = 0; i < r; ++i) {
      int pc = pivot_col_of_row[i];
      v[pc] = -A[i][c];
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

struct SocleResult {
  std::vector<Monomial> generators;  // minimal generators of (0 : m) as an ideal
  int k_dimension = 0;               // dim_k of the socle
};

/// Socle (0 : m) of an Artinian monomial quotient, by exact linear algebra
/// on the standard-monomial basis: the common kernel of multiplication by
/// the variables.
inline SocleResult socle(const MonomialQuotient& ring) {
  if (krull_dimension(ring) != 0)
    throw std::invalid_argument("socle: ring has positive dimension");
  const Field field = ring.base.field;
  const int d = ring.base.nvars();
  std::vector<Monomial> basis = standard_monomials(ring);
  const int n = static_cast<int>(basis.size());
  std::map<Monomial, int> index;
  for (int i = 0; i < n; ++i) index[basis[i]] = i;

  // stacked multiplication matrices, one block of rows per variable
  std::vector<std::vector<Scalar>> A(d * n, std::vector<Scalar>(n, Scalar::zero(field)));
  for (int v = 0; v < d; ++v)
    for (int j = 0; j < n; ++j) {
      std::vector<int> e = basis[j].exponents();
      e[v] += 1;
      Monomial img{e};
      auto it = index.find(img);
      if (it != index.end()) A[v * n + it->second][j] = Scalar::one(field);
    }
  auto kernel = kernel_basis(std::move(A), n, field);

  SocleResult out;
  out.k_dimension = static_cast<int>(kernel.size());
  std::vector<Monomial> gens;
  for (const auto& vec : kernel) {
    // for a monomial quotient the kernel is spanned by single basis monomials
    int nz = -1;
    for (int i = 0; i < n; ++i)
      if (!vec[i].is_zero()) {
        if (nz >= 0) throw std::logic_error("socle: kernel vector is not a monomial");
        nz = i;
      }
    gens.push_back(basis[nz]);
  }
  out.generators = minimalize_monomial_ideal(std::move(gens));
  return out;
}

/// The Matlis dual E of an Artinian monomial quotient: the k-dual of R with
/// the contragredient action. The dual basis is indexed by the standard
/// monomials; a variable acts by exponent subtraction ("inverse powers").
struct MatlisDual {
  MonomialQuotient ring;
  std::vector<Monomial> basis;

  int dim() const { return static_cast<int>(basis.size()); }

  /// Index of nu . (basis[i])^* = (basis[i] / nu)^*, if nu divides it.
  std::optional<int> act(const Monomial& nu, int i) const {
    if (!nu.divides(basis[i])) return std::nullopt;
    Monomial target = basis[i].divide(nu);
    for (size_t j = 0; j < basis.size(); ++j)
      if (basis[j] == target) return static_cast<int>(j);
    throw std::logic_error("MatlisDual: divisor of a standard monomial must be standard");
  }
};

inline MatlisDual matlis_dual(const MonomialQuotient& ring) {
  if (krull_dimension(ring) != 0)
    throw std::invalid_argument("matlis_dual: ring has positive dimension");
  return MatlisDual{ring, standard_monomials(ring)};
}

/// tau_M in dimension zero: ann(lic 0 E) with lic 0 E = mE by the
/// dimension-zero formula. Returns minimal monomial generators; equals the
/// socle by the structure theory, which callers cross-check.
inline std::vector<Monomial> tau_M_dim0(const MonomialQuotient& ring) {
  MatlisDual E = matlis_dual(ring);
  const Field field = ring.base.field;
  const int d = ring.base.nvars();
  const int n = E.dim();

  // mE: dual basis elements hit by some variable action
  std::set<int> mE;
  for (int v = 0; v < d; ++v)
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(d, 0);
      e[v] = 1;
      if (auto j = E.act(Monomial{e}, i)) mE.insert(*j);
    }

  // ann(mE): r = sum c_nu nu with r . w = 0 for every w in mE.
  // Row per (w in mE, reachable target); column per standard monomial nu.
  std::vector<std::vector<Scalar>> A;
  for (int w : mE) {
    std::map<int, std::vector<Scalar>> rows_for_target;
    for (int c = 0; c < n; ++c) {
      if (auto tgt = E.act(E.basis[c], w)) {
        auto [it, fresh] =
            rows_for_target.try_emplace(*tgt, std::vector<Scalar>(n, Scalar::zero(field)));
        it->second[c] = Scalar::one(field);
      }
    }
    for (auto& [tgt, row] : rows_for_target) A.push_back(std::move(row));
  }
  auto kernel = kernel_basis(std::move(A), n, field);
  std::vector<Monomial> gens;
  for (const auto& vec : kernel) {
    int nz = -1;
    for (int i = 0; i < n; ++i)
      if (!vec[i].is_zero()) {
        if (nz >= 0) throw std::logic_error("tau_M_dim0: kernel vector is not a monomial");
        nz = i;
      }
    gens.push_back(E.basis[nz]);
  }
  return minimalize_monomial_ideal(std::move(gens));
}

struct ConductorResult {
  std::vector<int> semigroup_gens;
  std::vector<int> gaps;
  int frobenius = -1;   // -1 encodes S = N (Frobenius number -infinity)
  int threshold = 0;    // c = F + 1; conductor ideal is { t^u : u >= c }
};

inline ConductorResult frobenius_and_conductor(const std::vector<int>& gens) {
  NumericalSemigroup S(gens);
  return ConductorResult{S.generators(), S.gaps(), S.frobenius(), S.conductor()};
}

struct TauDim1Result {
  std::vector<int> sampled_exponents;
  int conductor_threshold = 0;
  bool equals_conductor = false;
  // the intersected colon ideal, as members below `tail_from` plus every
  // semigroup element from `tail_from` on
  std::vector<int> intersection_sporadic;
  int tail_from = 0;
};

/// Samples tau_I over a 1-dimensional semigroup ring: intersects the colons
/// (t^s : closure(t^s)) over the given exponents. The conductor is contained
/// in every colon (checked); the result records whether the intersection has
/// collapsed onto the conductor exactly.
inline TauDim1Result tau_I_sample_dim1(const SemigroupRing& ring,
                                       const std::vector<int>& exponents) {
  NumericalSemigroup S(ring.gens);
  SemigroupIdeal conductor(S, {}, S.conductor());
  std::optional<SemigroupIdeal> acc;
  for (int s : exponents) {
    if (s <= 0 || !S.contains(s))
      throw std::invalid_argument("tau_I_sample_dim1: exponent " + std::to_string(s) +
                                  " is not a positive element of S");
    SemigroupIdeal I = SemigroupIdeal::from_generators(S, {s});
    SemigroupIdeal colon = I.colon(I.closure());
    if (!colon.contains_ideal(conductor))
      throw std::logic_error("tau_I_sample_dim1: conductor not inside a sampled colon");
    acc = acc ? acc->intersect(colon) : colon;
  }
  if (!acc) acc = SemigroupIdeal::whole_ring(S);  // empty sample: intersection is R
  TauDim1Result out;
  out.sampled_exponents = exponents;
  out.conductor_threshold = S.conductor();
  out.equals_conductor = (*acc == conductor);
  out.tail_from = acc->threshold();
  out.intersection_sporadic.assign(acc->sporadic().begin(), acc->sporadic().end());
  return out;
}

struct TauChainStage {
  int n = 0;
  IntegralityCertificate certificate;  // x^n y^n integral over (x^{2n}, y^{2n})
  std::vector<Monomial> colon_gens;    // A_n = ((x^{2n}, y^{2n}) : x^n y^n)
  bool contained = false;              // A_n inside (x^n, y^n)
};

struct TauChain {
  std::vector<TauChainStage> stages;
  std::vector<Monomial> intersection;  // of all computed A_n
};

/// The vanishing chain in dimension >= 2: tau_I sits inside every
/// A_n = ((x^{2n}, y^{2n}) : x^n y^n) and A_n is inside (x^n, y^n), so the
/// chain exhibits tau_I inside m^n for every computed n. Never asserted as
/// a computed zero ideal; the chain of upper bounds is the statement.
inline TauChain tau_upper_bound_dim2(const PolyRing& ring, int n_max) {
  if (ring.nvars() < 2)
    throw std::invalid_argument("tau_upper_bound_dim2: need at least two variables");
  if (n_max < 1) throw std::invalid_argument("tau_upper_bound_dim2: n_max < 1");
  const Field field = ring.field;
  const int d = ring.nvars();
  auto xy = [&](int a, int b) {
    std::vector<int> e(d, 0);
    e[0] = a;
    e[1] = b;
    return Monomial(e);
  };
  RingDescriptor rd(ring);
  TauChain chain;
  for (int n = 1; n <= n_max; ++n) {
    TauChainStage stage;
    stage.n = n;
    std::vector<Polynomial> I = {Polynomial::monomial(xy(2 * n, 0), field),
                                 Polynomial::monomial(xy(0, 2 * n), field)};
    auto res = certify_ideal_member(Polynomial::monomial(xy(n, n), field), I, 4, rd);
    if (!res.found)
      throw std::logic_error("tau_upper_bound_dim2: missing certificate for x^n y^n");
    stage.certificate = std::move(*res.certificate);
    stage.colon_gens = monomial_colon({xy(2 * n, 0), xy(0, 2 * n)}, {xy(n, n)});
    stage.contained = true;
    std::vector<Monomial> mn = {xy(n, 0), xy(0, n)};
    for (const auto& g : stage.colon_gens)
      if (!monomial_ideal_member(g, mn)) stage.contained = false;
    if (!stage.contained)
      throw std::logic_error("tau_upper_bound_dim2: A_n escapes (x^n, y^n)");
    chain.intersection = chain.stages.empty()
                             ? stage.colon_gens
                             : intersect_monomial_ideals(chain.intersection, stage.colon_gens);
    chain.stages.push_back(std::move(stage));
  }
  return chain;
}

struct LcStageReport {
  int t = 0;
  std::vector<int> parameter_vars;
  std::vector<Monomial> closure_gens;  // closure of (x_1^t, ..., x_d^t)
  std::vector<Monomial> ann_gens;      // ((x_1^t,...) : closure)
  bool transition_ok = false;          // x * closure_t inside closure_{t+1}
};

/// One finite stage of the local-cohomology direct limit: materializes
/// R/(x_1^t, ..., x_d^t), computes the annihilator of the closure of the
/// stage ideal, and checks that multiplication by x = prod x_i carries the
/// stage-t closure into the stage-(t+1) closure.
inline LcStageReport lc_stage_probe(const PolyRing& ring,
                                    const std::vector<int>& parameter_vars, int t) {
  if (t < 1) throw std::invalid_argument("lc_stage_probe: t must be positive");
  if (parameter_vars.empty())
    throw std::invalid_argument("lc_stage_probe: no parameters");
  std::set<int> seen;
  for (int v : parameter_vars) {
    if (v < 0 || v >= ring.nvars())
      throw std::invalid_argument("lc_stage_probe: parameter index out of range");
    if (!seen.insert(v).second)
      throw std::invalid_argument("lc_stage_probe: parameters must be distinct variables");
  }
  const int d = ring.nvars();
  auto power_ideal = [&](int k) {
    std::vector<Monomial> gens;
    for (int v : parameter_vars) {
      std::vector<int> e(d, 0);
      e[v] = k;
      gens.push_back(Monomial{e});
    }
    return gens;
  };
  LcStageReport out;
  out.t = t;
  out.parameter_vars = parameter_vars;
  auto stage = power_ideal(t);
  out.closure_gens = newton_closure(stage, ring);
  out.ann_gens = monomial_colon(stage, out.closure_gens);
  auto next_closure = newton_closure(power_ideal(t + 1), ring);
  std::vector<int> xe(d, 0);
  for (int v : parameter_vars) xe[v] = 1;
  Monomial x{xe};
  out.transition_ok = true;
  for (const auto& g : out.closure_gens)
    if (!monomial_ideal_member(x * g, next_closure)) out.transition_ok = false;
  return out;
}

}  // namespace closurelab
