#pragma once

#include <map>
#include <random>

#include "closurelab/module_closure.hpp"
#include "closurelab/newton.hpp"
#include "closurelab/test_ideals.hpp"

namespace closurelab {

/// Deterministic integer source. Draws go through the raw engine only, so a
/// fixed seed reproduces the same instances bit for bit.
class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed) : rng_(seed) {}
  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 rng_;
};

inline Monomial rand_monomial(TrialRng& rng, int nvars, int maxdeg, int mindeg = 0) {
  while (true) {
    std::vector<int> e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = rng.range(0, maxdeg);
    Monomial m{e};
    if (m.total_degree() >= mindeg && m.total_degree() <= maxdeg) return m;
  }
}

inline std::vector<Monomial> rand_monomial_ideal(TrialRng& rng, int nvars, int max_gens,
                                                 int maxdeg) {
  int count = rng.range(1, max_gens);
  std::vector<Monomial> gens;
  for (int i = 0; i < count; ++i) gens.push_back(rand_monomial(rng, nvars, maxdeg, 1));
  return minimalize_monomial_ideal(std::move(gens));
}

/// Artinian monomial quotients in two variables with m^4 = 0 (hence m^5 = 0):
/// pure powers x^a, y^b with a, b <= 4, everything of degree 4, and a few
/// random extra monomials.
inline MonomialQuotient rand_artinian_quotient(TrialRng& rng, const Field& field = Field{}) {
  PolyRing base{field, {"x", "y"}};
  std::vector<Monomial> q;
  int a = rng.range(1, 4), b = rng.range(1, 4);
  q.push_back(Monomial{std::vector<int>{a, 0}});
  q.push_back(Monomial{std::vector<int>{0, b}});
  for (int i = 0; i <= 4; ++i) q.push_back(Monomial{std::vector<int>{i, 4 - i}});
  int extras = rng.range(0, 2);
  for (int i = 0; i < extras; ++i) q.push_back(rand_monomial(rng, 2, 3, 1));
  return MonomialQuotient{base, minimalize_monomial_ideal(std::move(q))};
}

inline Polynomial rand_small_poly(TrialRng& rng, const Field& field, int maxdeg) {
  Polynomial p(2);
  int terms = rng.range(1, 2);
  for (int i = 0; i < terms; ++i)
    p.add_term(rand_monomial(rng, 2, maxdeg), Scalar::from_int(rng.range(1, 2), field));
  return p;
}

inline FreeVec rand_vector(TrialRng& rng, const Field& field, int rank, int maxdeg) {
  FreeVec v(rank, 2);
  int coord = rng.range(0, rank - 1);
  v[coord] = rand_small_poly(rng, field, maxdeg);
  if (rank > 1 && rng.range(0, 2) == 0) {
    int other = rng.range(0, rank - 1);
    v[other] += rand_small_poly(rng, field, maxdeg);
  }
  return v;
}

inline SubmodulePresentation rand_dim0_presentation(TrialRng& rng,
                                                    const MonomialQuotient& ring) {
  SubmodulePresentation pres;
  pres.ring = RingDescriptor(ring);
  pres.rank = rng.range(1, 2);
  const Field f = ring.base.field;
  int nu = rng.range(0, 2), nl = rng.range(0, 2);
  for (int i = 0; i < nu; ++i)
    pres.kernel_gens.push_back(rand_vector(rng, f, pres.rank, 2));
  for (int i = 0; i < nl; ++i)
    pres.sub_lifts.push_back(rand_vector(rng, f, pres.rank, 2));
  return pres;
}

/// Counts per property: checks attempted and violations found.
struct PropertyCounts {
  std::map<std::string, long> checks;
  std::map<std::string, long> violations;
  int trials = 0;

  void record(const std::string& item, bool ok) {
    ++checks[item];
    if (!ok) ++violations[item];
  }
  long total_violations() const {
    long v = 0;
    for (auto& [k, n] : violations) v += n;
    return v;
  }
  bool ok() const { return total_violations() == 0; }
};

/// Module equality of generated submodules (mod the presentation kernel).
inline bool spans_agree(const std::vector<FreeVec>& A, const std::vector<FreeVec>& B,
                        const std::vector<FreeVec>& kernel, const RingDescriptor& ring) {
  std::vector<FreeVec> bk = B;
  bk.insert(bk.end(), kernel.begin(), kernel.end());
  for (const auto& a : A)
    if (!module_member(a, bk, ring)) return false;
  std::vector<FreeVec> ak = A;
  ak.insert(ak.end(), kernel.begin(), kernel.end());
  for (const auto& b : B)
    if (!module_member(b, ak, ring)) return false;
  return true;
}

/// One seeded trial of the executable property suite over the exact classes:
/// idempotence, functoriality, submodule monotonicity, direct sums, colons,
/// the semiprime property, and the Nakayama property.
inline void run_property_trial(std::uint64_t seed, int trial, PropertyCounts& out) {
  TrialRng rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(trial));
  const Field f;
  PolyRing R2{f, {"x", "y"}};
  RingDescriptor rd2(R2);

  // --- monomial-ideal properties ------------------------------------------
  auto I = rand_monomial_ideal(rng, 2, 4, 6);
  auto J = rand_monomial_ideal(rng, 2, 3, 4);
  auto Ibar = newton_closure(I, R2);

  out.record("idempotence", newton_closure(Ibar, R2) == Ibar);

  {  // submodule monotonicity: I inside I + J forces nested closures
    std::vector<Monomial> IJ = I;
    IJ.insert(IJ.end(), J.begin(), J.end());
    auto big = newton_closure(minimalize_monomial_ideal(IJ), R2);
    bool nested = true;
    for (const auto& g : Ibar)
      if (!monomial_ideal_member(g, big)) nested = false;
    out.record("submodules", nested);
  }

  {  // colons: the quotient of an integrally closed ideal is closed
    auto C = monomial_colon(Ibar, J);
    out.record("colons", newton_closure(C, R2) == minimalize_monomial_ideal(C));
  }

  {  // semiprime: closure(J I) = closure(closure(J) closure(I))
    auto prod = [](const std::vector<Monomial>& A, const std::vector<Monomial>& B) {
      std::vector<Monomial> P;
      for (const auto& a : A)
        for (const auto& b : B) P.push_back(a * b);
      return minimalize_monomial_ideal(P);
    };
    auto lhs = newton_closure(prod(J, I), R2);
    auto rhs = newton_closure(prod(newton_closure(J, R2), Ibar), R2);
    out.record("semiprime", lhs == rhs);
  }

  // --- split-monomial direct sums ------------------------------------------
  {
    int rank = rng.range(1, 2);
    std::vector<std::vector<Monomial>> ideals;
    SubmodulePresentation pres;
    pres.ring = rd2;
    pres.rank = rank;
    for (int i = 0; i < rank; ++i) {
      ideals.push_back(rand_monomial_ideal(rng, 2, 3, 4));
      for (const auto& g : ideals.back()) {
        FreeVec v(rank, 2);
        v[i] = Polynomial::monomial(g, f);
        pres.sub_lifts.push_back(v);
      }
    }
    auto closures = lic_split_monomial(ideals, R2);
    for (int probe = 0; probe < 2; ++probe) {
      int comp = rng.range(0, rank - 1);
      Monomial z = rand_monomial(rng, 2, 5);
      bool in_closure = monomial_ideal_member(z, closures[comp]);
      // the direct-sum search must agree with the componentwise one
      FreeVec ze(rank, 2);
      ze[comp] = Polynomial::monomial(z, f);
      auto whole = free_closure_member(ze, pres.K(), 6, rd2);
      auto part = certify_ideal_member(Polynomial::monomial(z, f),
                                       [&] {
                                         std::vector<Polynomial> gs;
                                         for (const auto& g : ideals[comp])
                                           gs.push_back(Polynomial::monomial(g, f));
                                         return gs;
                                       }(),
                                       6, rd2);
      out.record("direct-sums", whole.found == part.found && whole.found == in_closure);
      if (whole.found) {
        // Nakayama: members land in L + mM (for a submodule of a free module
        // over the graded-local ring, L + mF)
        std::vector<FreeVec> gens = pres.L_plus_mM_lifts();
        out.record("nakayama", module_member(ze, gens, rd2));
      }
    }
  }

  // --- dimension-zero modules ----------------------------------------------
  {
    MonomialQuotient A = rand_artinian_quotient(rng, f);
    RingDescriptor rdA(A);
    SubmodulePresentation pres = rand_dim0_presentation(rng, A);
    auto closed = lic_exact_dim0(pres);

    {  // idempotence: (L + mM) + mM = L + mM
      SubmodulePresentation again = pres;
      again.sub_lifts = closed;
      auto twice = lic_exact_dim0(again);
      out.record("idempotence",
                 spans_agree(twice, closed, pres.kernel_gens, rdA));
    }

    {  // submodules: dropping generators of L shrinks the closure
      SubmodulePresentation sub = pres;
      if (!sub.sub_lifts.empty()) sub.sub_lifts.pop_back();
      auto small = lic_exact_dim0(sub);
      bool nested = true;
      std::vector<FreeVec> big = closed;
      big.insert(big.end(), pres.kernel_gens.begin(), pres.kernel_gens.end());
      for (const auto& g : small)
        if (!module_member(g, big, rdA)) nested = false;
      out.record("submodules", nested);
    }

    {  // functoriality: certificates survive quotient maps M -> M/N
      FreeVec z = rand_vector(rng, f, pres.rank, 1);
      // force a member: multiply by a variable so z lies in mM + L
      z = z.times_term(Monomial{std::vector<int>{1, 0}}, Scalar::one(f));
      auto res = free_closure_member(z, pres.K(), 4, rdA);
      out.record("dim0-members-certified", res.found);
      if (res.found) {
        out.record("nakayama", member_L_plus_mM(z, pres));
        SubmodulePresentation quot = pres;
        quot.kernel_gens.push_back(rand_vector(rng, f, pres.rank, 2));
        auto res2 = free_closure_member(z, quot.K(), 4, rdA);
        out.record("functoriality", res2.found);
      }
      // lic <= Rees on conclusive verdicts
      auto lic = lic_member(z, pres, 4);
      auto rees = rees_member(z, pres);
      if (lic.conclusive() && rees.conclusive())
        out.record("lic-rees-containment",
                   !(lic.verdict == Verdict::Member && rees.verdict == Verdict::NonMember));
    }
  }

  // --- semigroup rings ------------------------------------------------------
  {
    static const std::vector<std::vector<int>> semigroups = {
        {2, 3}, {3, 5}, {3, 4, 5}, {2, 5}, {4, 5, 6}};
    NumericalSemigroup S(semigroups[static_cast<size_t>(rng.range(0, 4))]);
    std::vector<int> mgens, lgens;
    int nm = rng.range(1, 2);
    for (int i = 0; i < nm; ++i) {
      int s = rng.range(0, S.conductor() + 4);
      while (!S.contains(s)) ++s;
      mgens.push_back(s);
    }
    SemigroupIdeal M = SemigroupIdeal::from_generators(S, mgens);
    for (int g : M.members_up_to(M.min_exponent() + S.conductor() + 3))
      if (rng.range(0, 1) == 0) lgens.push_back(g);
    if (lgens.empty()) lgens.push_back(M.min_generators().front());
    SemigroupIdeal L = SemigroupIdeal::from_generators(S, lgens);

    out.record("idempotence", L.closure().closure() == L.closure());

    int probe = M.min_exponent();
    while (!M.contains(probe)) ++probe;
    auto lic = lic_member_semigroup(probe, S, L, M);
    bool rees = rees_member_semigroup(probe, S, L, M);
    if (lic.conclusive())
      out.record("lic-rees-containment",
                 !(lic.verdict == Verdict::Member && !rees));
    if (lic.verdict == Verdict::Member) {
      SemigroupIdeal upper = L.plus(semigroup_max_ideal(S).times(M));
      out.record("nakayama", upper.contains(probe));
    }
  }
}

inline PropertyCounts run_property_suite(std::uint64_t seed, int trials) {
  PropertyCounts out;
  out.trials = trials;
  for (int t = 0; t < trials; ++t) run_property_trial(seed, t, out);
  return out;
}

}  // namespace closurelab
