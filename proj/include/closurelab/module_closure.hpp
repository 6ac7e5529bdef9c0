#pragma once

#include "closurelab/closure_search.hpp"
#include "closurelab/newton.hpp"

namespace closurelab {

enum class Verdict { Member, NonMember, Inconclusive };
enum class Provenance { ExactOracle, Certificate, ValuationCheck, Inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Member: return "member";
    case Verdict::NonMember: return "non-member";
    default: return "inconclusive";
  }
}
inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::ExactOracle: return "exact-oracle";
    case Provenance::Certificate: return "certificate";
    case Provenance::ValuationCheck: return "valuation-check";
    default: return "inconclusive";
  }
}

struct ClosureVerdict {
  Verdict verdict = Verdict::Inconclusive;
  Provenance provenance = Provenance::Inconclusive;
  std::optional<IntegralityCertificate> certificate;
  std::string note;

  bool conclusive() const { return verdict != Verdict::Inconclusive; }
};

/// An inclusion L <= M given through a free cover pi: F = R^rank -> M with
/// kernel generated by `kernel_gens` (the module U), and generators of L
/// given by chosen lifts in F. The preimage K = pi^{-1}(L) is generated by
/// the lifts together with U, which is all the closure machinery needs; the
/// presented answers depend only on M/L.
struct SubmodulePresentation {
  RingDescriptor ring;
  int rank = 1;
  std::vector<FreeVec> kernel_gens;  // U, with M = F/U
  std::vector<FreeVec> sub_lifts;    // lifts of generators of L

  void validate() const {
    if (ring.is_semigroup())
      throw std::invalid_argument(
          "SubmodulePresentation: semigroup modules use the exponent-set interface");
    for (const auto& v : kernel_gens)
      if (v.rank() != rank)
        throw std::invalid_argument("SubmodulePresentation: kernel generator rank mismatch");
    for (const auto& v : sub_lifts)
      if (v.rank() != rank)
        throw std::invalid_argument("SubmodulePresentation: lift rank mismatch");
  }

  /// Generators of K = pi^{-1}(L).
  std::vector<FreeVec> K() const {
    std::vector<FreeVec> k = sub_lifts;
    k.insert(k.end(), kernel_gens.begin(), kernel_gens.end());
    return k;
  }

  /// Generators of L + mM, as lifts: the L-lifts plus x_i e_j for all
  /// variables x_i and free positions e_j.
  std::vector<FreeVec> L_plus_mM_lifts() const {
    std::vector<FreeVec> gens = sub_lifts;
    const PolyRing& base = ring.base_poly();
    for (int i = 0; i < base.nvars(); ++i)
      for (int j = 0; j < rank; ++j) {
        FreeVec v(rank, base.nvars());
        std::vector<int> e(base.nvars(), 0);
        e[i] = 1;
        v[j] = Polynomial::monomial(Monomial(e), base.field);
        gens.push_back(v);
      }
    return gens;
  }

  /// True when M is presented as a free module (U = 0) and L splits as a
  /// direct sum of monomial ideals along the coordinates. When so, fills
  /// `ideals` with the per-coordinate monomial generators.
  bool split_monomial(std::vector<std::vector<Monomial>>* ideals = nullptr) const {
    for (const auto& u : kernel_gens)
      if (!u.is_zero()) return false;
    std::vector<std::vector<Monomial>> out(rank);
    for (const auto& v : sub_lifts) {
      int nz = -1;
      for (int i = 0; i < rank; ++i) {
        if (v[i].is_zero()) continue;
        if (nz >= 0) return false;
        nz = i;
      }
      if (nz < 0) continue;
      if (!v[nz].is_monomial()) return false;
      out[nz].push_back(v[nz].only_term().first);
    }
    if (ideals) *ideals = std::move(out);
    return true;
  }
};

/// Membership of a lifted element in L + mM (an exact computation).
inline bool member_L_plus_mM(const FreeVec& z_lift, const SubmodulePresentation& pres) {
  std::vector<FreeVec> gens = pres.L_plus_mM_lifts();
  gens.insert(gens.end(), pres.kernel_gens.begin(), pres.kernel_gens.end());
  return module_member(z_lift, gens, pres.ring);
}

/// Exact dimension-zero closure: lic L M = L + mM over an Artinian ring.
/// Returns lifts of a pruned generating set.
inline std::vector<FreeVec> lic_exact_dim0(const SubmodulePresentation& pres) {
  pres.validate();
  if (!is_artinian(pres.ring))
    throw std::invalid_argument("lic_exact_dim0: ring is not Artinian");
  std::vector<FreeVec> gens = pres.L_plus_mM_lifts();
  // prune generators lying in the span of the remaining ones (mod U)
  std::vector<FreeVec> kept;
  std::vector<bool> dropped(gens.size(), false);
  for (size_t i = 0; i < gens.size(); ++i) {
    std::vector<FreeVec> others = pres.kernel_gens;
    for (size_t j = 0; j < gens.size(); ++j)
      if (j != i && !dropped[j]) others.push_back(gens[j]);
    if (module_member(gens[i], others, pres.ring))
      dropped[i] = true;
  }
  for (size_t i = 0; i < gens.size(); ++i)
    if (!dropped[i]) kept.push_back(gens[i]);
  return kept;
}

/// Componentwise Newton closure of a split-monomial submodule of R^r.
inline std::vector<std::vector<Monomial>> lic_split_monomial(
    const std::vector<std::vector<Monomial>>& ideals, const PolyRing& ring) {
  std::vector<std::vector<Monomial>> out;
  out.reserve(ideals.size());
  for (const auto& I : ideals)
    out.push_back(I.empty() ? std::vector<Monomial>{} : newton_closure(I, ring));
  return out;
}

/// Polynomial membership in a monomial ideal: every term must be divisible.
inline bool poly_in_monomial_ideal(const Polynomial& p, const std::vector<Monomial>& gens) {
  for (auto& [m, c] : p.terms())
    if (!monomial_ideal_member(m, gens)) return false;
  return true;
}

/// Liftable integral closure membership. Conclusive answers come from a
/// certificate (membership), the dimension-zero formula, the split-monomial
/// formula, or Nakayama exclusion z not in L + mM; anything else is
/// reported inconclusive rather than guessed.
inline ClosureVerdict lic_member(const FreeVec& z_lift, const SubmodulePresentation& pres,
                                 int max_degree = 6) {
  pres.validate();
  if (z_lift.rank() != pres.rank)
    throw std::invalid_argument("lic_member: element rank does not match presentation");
  ClosureVerdict out;

  auto search = [&]() { return free_closure_member(z_lift, pres.K(), max_degree, pres.ring); };

  if (is_artinian(pres.ring)) {
    bool in = member_L_plus_mM(z_lift, pres);
    auto res = search();
    if (res.found && !in)
      throw std::logic_error("lic_member: certificate contradicts the dim-0 formula");
    out.verdict = in ? Verdict::Member : Verdict::NonMember;
    out.provenance = Provenance::ExactOracle;
    out.note = "dim-0 formula lic L M = L + mM";
    if (res.found) out.certificate = std::move(res.certificate);
    return out;
  }

  std::vector<std::vector<Monomial>> ideals;
  if (pres.ring.is_poly() && pres.split_monomial(&ideals)) {
    auto closures = lic_split_monomial(ideals, pres.ring.poly());
    bool in = true;
    for (int i = 0; i < pres.rank; ++i)
      if (!z_lift[i].is_zero() && !poly_in_monomial_ideal(z_lift[i], closures[i])) {
        in = false;
        break;
      }
    auto res = search();
    if (res.found && !in)
      throw std::logic_error("lic_member: certificate contradicts the Newton oracle");
    out.verdict = in ? Verdict::Member : Verdict::NonMember;
    out.provenance = Provenance::ExactOracle;
    out.note = "split-monomial formula (componentwise Newton closure)";
    if (res.found) out.certificate = std::move(res.certificate);
    return out;
  }

  auto res = search();
  if (res.found) {
    out.verdict = Verdict::Member;
    out.provenance = Provenance::Certificate;
    out.certificate = std::move(res.certificate);
    return out;
  }
  if (pres.ring.is_quotient() && !member_L_plus_mM(z_lift, pres)) {
    out.verdict = Verdict::NonMember;
    out.provenance = Provenance::ExactOracle;
    out.note = "Nakayama exclusion: z not in L + mM";
    return out;
  }
  out.note = "certificate bound exhausted (max degree " + std::to_string(max_degree) + ")";
  return out;
}

/// Rees integral closure membership, through minimal primes. Supported:
/// quotients whose reductions land in a field (linear algebra) or in a
/// polynomial ring with a split-monomial image (componentwise Newton
/// closure). Anything else raises instead of guessing.
inline ClosureVerdict rees_member(const FreeVec& z_lift, const SubmodulePresentation& pres) {
  pres.validate();
  if (z_lift.rank() != pres.rank)
    throw std::invalid_argument("rees_member: element rank does not match presentation");
  const PolyRing& base = pres.ring.base_poly();
  auto primes = minimal_primes_monomial(pres.ring.quotient_gens(), base);

  auto kill_vars = [&](const Polynomial& p, const std::set<int>& dead,
                       const std::vector<int>& var_map, int new_nvars) {
    Polynomial out(new_nvars);
    for (auto& [m, c] : p.terms()) {
      bool dies = false;
      for (int v : dead)
        if (m[v] > 0) {
          dies = true;
          break;
        }
      if (dies) continue;
      std::vector<int> e(new_nvars, 0);
      for (int i = 0; i < m.nvars(); ++i)
        if (var_map[i] >= 0) e[var_map[i]] = m[i];
      out.add_term(Monomial(e), c);
    }
    return out;
  };

  bool member_everywhere = true;
  for (const auto& p : primes) {
    std::vector<int> var_map(base.nvars(), -1);
    std::vector<std::string> vars;
    for (int i = 0; i < base.nvars(); ++i)
      if (!p.count(i)) {
        var_map[i] = static_cast<int>(vars.size());
        vars.push_back(base.vars[i]);
      }
    PolyRing quotient_ring{base.field, vars};
    RingDescriptor rr(quotient_ring);
    int nv = quotient_ring.nvars();

    auto kill_vec = [&](const FreeVec& v) {
      FreeVec out(pres.rank, nv);
      for (int i = 0; i < pres.rank; ++i)
        out[i] = kill_vars(v[i], p, var_map, nv);
      return out;
    };

    std::vector<FreeVec> U_img, L_img;
    for (const auto& u : pres.kernel_gens) {
      FreeVec v = kill_vec(u);
      if (!v.is_zero()) U_img.push_back(v);
    }
    for (const auto& l : pres.sub_lifts) {
      FreeVec v = kill_vec(l);
      if (!v.is_zero()) L_img.push_back(v);
    }
    FreeVec z_img = kill_vec(z_lift);

    bool member_here;
    if (nv == 0) {
      // residue field: Rees closure of a subspace is the subspace itself
      std::vector<FreeVec> span = L_img;
      span.insert(span.end(), U_img.begin(), U_img.end());
      member_here = z_img.is_zero() || module_member(z_img, span, rr);
    } else {
      SubmodulePresentation img;
      img.ring = rr;
      img.rank = pres.rank;
      img.kernel_gens = U_img;
      img.sub_lifts = L_img;
      std::vector<std::vector<Monomial>> ideals;
      if (!img.split_monomial(&ideals))
        throw std::invalid_argument(
            "rees_member: reduction mod (" + std::to_string(p.size()) +
            "-variable prime) leaves a non-split instance; outside the decidable class");
      auto closures = lic_split_monomial(ideals, quotient_ring);
      member_here = true;
      for (int i = 0; i < pres.rank && member_here; ++i)
        if (!z_img[i].is_zero() && !poly_in_monomial_ideal(z_img[i], closures[i]))
          member_here = false;
    }
    if (!member_here) {
      member_everywhere = false;
      break;
    }
  }
  ClosureVerdict out;
  out.verdict = member_everywhere ? Verdict::Member : Verdict::NonMember;
  out.provenance = Provenance::ValuationCheck;
  out.note = "checked over every minimal prime";
  return out;
}

/// Both closures side by side. The containment lic <= Rees is asserted
/// whenever both verdicts are conclusive.
struct ClosureReport {
  FreeVec element;
  ClosureVerdict lic;
  ClosureVerdict rees;
};

inline ClosureReport compare_closures(const FreeVec& z_lift,
                                      const SubmodulePresentation& pres,
                                      int max_degree = 6) {
  ClosureReport rep;
  rep.element = z_lift;
  rep.lic = lic_member(z_lift, pres, max_degree);
  rep.rees = rees_member(z_lift, pres);
  if (rep.lic.verdict == Verdict::Member && rep.rees.verdict == Verdict::NonMember)
    throw std::logic_error("compare_closures: lic <= Rees containment violated");
  return rep;
}

// ---------------------------------------------------------------------------
// semigroup-ring closures on the ideal-as-module representation

/// lic L M bracketed between L and L + mM; when the bracket collapses the
/// closure is known exactly. For M = R the closure is exactly the ideal
/// closure and the bracket is ignored.
struct SemigroupLicResult {
  SemigroupIdeal lower;
  SemigroupIdeal upper;
  bool exact = false;
};

inline SemigroupIdeal semigroup_max_ideal(const NumericalSemigroup& S) {
  return SemigroupIdeal::from_generators(S, S.generators());
}

inline SemigroupLicResult lic_semigroup(const NumericalSemigroup& S,
                                        const SemigroupIdeal& L,
                                        const SemigroupIdeal& M) {
  if (!M.contains_ideal(L))
    throw std::invalid_argument("lic_semigroup: L is not contained in M");
  if (M == SemigroupIdeal::whole_ring(S)) {
    SemigroupIdeal c = L.closure();
    return {c, c, true};
  }
  SemigroupIdeal upper = L.plus(semigroup_max_ideal(S).times(M));
  return {L, upper, upper == L};
}

inline ClosureVerdict lic_member_semigroup(int u, const NumericalSemigroup& S,
                                           const SemigroupIdeal& L,
                                           const SemigroupIdeal& M,
                                           int max_degree = 6) {
  if (!M.contains(u))
    throw std::invalid_argument("lic_member_semigroup: element is not in M");
  SemigroupRing ring{Field{}, S.generators()};
  ClosureVerdict out;
  if (M == SemigroupIdeal::whole_ring(S)) {
    // exact: lic L R = closure of the ideal L
    bool in = L.closure().contains(u);
    out.verdict = in ? Verdict::Member : Verdict::NonMember;
    out.provenance = Provenance::ExactOracle;
    out.note = "semigroup ideal closure";
    if (in) {
      auto res = certify_semigroup_member(u, L.min_generators(), max_degree, ring);
      if (res.found) out.certificate = std::move(res.certificate);
    }
    return out;
  }
  if (L.contains(u)) {
    out.verdict = Verdict::Member;
    out.provenance = Provenance::ExactOracle;
    out.note = "element of L";
    auto res = certify_semigroup_member(u, L.min_generators(), max_degree, ring);
    if (res.found) out.certificate = std::move(res.certificate);
    return out;
  }
  SemigroupLicResult bracket = lic_semigroup(S, L, M);
  if (!bracket.upper.contains(u)) {
    out.verdict = Verdict::NonMember;
    out.provenance = Provenance::ExactOracle;
    out.note = "Nakayama exclusion: z not in L + mM";
    return out;
  }
  out.note = "between L and L + mM; not decided";
  return out;
}

inline bool rees_member_semigroup(int u, const NumericalSemigroup& S,
                                  const SemigroupIdeal& L, const SemigroupIdeal& M) {
  if (!M.contains(u))
    throw std::invalid_argument("rees_member_semigroup: element is not in M");
  if (L.is_zero()) return false;  // over a domain, Ric 0 M = 0
  return u >= L.min_exponent();   // ord_t check against L k[[t]]
}

// ---------------------------------------------------------------------------

enum class IndependenceStatus { Agree, Indeterminate, Disagree };

struct IndependenceOutcome {
  IndependenceStatus status = IndependenceStatus::Agree;
  int conclusive_pairs = 0;
  int indeterminate_pairs = 0;
};

/// Cross-checks that two presentations of the same L <= M give the same
/// conclusive lic verdicts on corresponding probes. Probes that are
/// inconclusive on either side are indeterminate, not failures.
inline IndependenceOutcome presentation_independence_check(
    const SubmodulePresentation& p1, const SubmodulePresentation& p2,
    const std::vector<std::pair<FreeVec, FreeVec>>& probes, int max_degree = 6) {
  IndependenceOutcome out;
  for (const auto& [z1, z2] : probes) {
    ClosureVerdict v1 = lic_member(z1, p1, max_degree);
    ClosureVerdict v2 = lic_member(z2, p2, max_degree);
    if (!v1.conclusive() || !v2.conclusive()) {
      ++out.indeterminate_pairs;
      continue;
    }
    ++out.conclusive_pairs;
    if (v1.verdict != v2.verdict) {
      out.status = IndependenceStatus::Disagree;
      return out;
    }
  }
  if (out.indeterminate_pairs > 0 && out.status == IndependenceStatus::Agree)
    out.status = IndependenceStatus::Indeterminate;
  return out;
}

}  // namespace closurelab
