#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <set>

#include "closurelab/freevec.hpp"
#include "closurelab/ring.hpp"

namespace closurelab {

/// Groebner basis of a submodule of R^r (r = 1 recovers ideals), computed by
/// Buchberger's algorithm under a position-over-term order. With `track` set
/// the basis carries, for every element, an explicit expression in the input
/// generators, so that divisions can report membership witnesses.
class ModuleBasis {
 public:
  ModuleBasis(std::vector<FreeVec> gens, MonomialOrder order, bool track = false)
      : order_(order), track_(track), ngens_(static_cast<int>(gens.size())) {
    int nv = 0;
    for (const auto& g : gens)
      if (!g.is_zero()) nv = g.nvars();
    field_ = Field{};
    for (const auto& g : gens)
      for (const auto& p : g.coords())
        if (!p.is_zero()) field_ = p.field_hint();
    for (int i = 0; i < ngens_; ++i) {
      if (gens[i].is_zero()) continue;
      basis_.push_back(gens[i]);
      if (track_) {
        std::vector<Polynomial> rep(ngens_, Polynomial(nv));
        rep[i] = Polynomial::constant(Scalar::one(field_), nv);
        reps_.push_back(std::move(rep));
      }
    }
    buchberger();
    interreduce();
  }

  const std::vector<FreeVec>& basis() const { return basis_; }
  MonomialOrder order() const { return order_; }

  /// Fully reduced normal form. If `gen_quotients` is non-null (requires
  /// tracking), it receives q with v = sum_i q_i * gens_i + nf.
  FreeVec normal_form(const FreeVec& v,
                      std::vector<Polynomial>* gen_quotients = nullptr) const {
    if (gen_quotients && !track_)
      throw std::logic_error("ModuleBasis: witness requested without tracking");
    std::vector<Polynomial> bq;
    if (gen_quotients) bq.assign(basis_.size(), Polynomial(v.nvars()));

    FreeVec p = v;
    FreeVec rem(v.rank(), v.nvars());
    while (!p.is_zero()) {
      ModTerm t = leading_modterm(p, order_);
      Scalar c = p[t.comp].terms().at(t.mono);
      bool reduced = false;
      for (size_t i = 0; i < basis_.size(); ++i) {
        ModTerm lt = lead_[i];
        if (lt.comp != t.comp || !lt.mono.divides(t.mono)) continue;
        Scalar factor = c / basis_[i][lt.comp].terms().at(lt.mono);
        Monomial shift = t.mono.divide(lt.mono);
        p -= basis_[i].times_term(shift, factor);
        if (gen_quotients) bq[i].add_term(shift, factor);
        reduced = true;
        break;
      }
      if (!reduced) {
        rem[t.comp].add_term(t.mono, c);
        p[t.comp].add_term(t.mono, -c);
      }
    }
    if (gen_quotients) {
      gen_quotients->assign(ngens_, Polynomial(v.nvars()));
      for (size_t i = 0; i < basis_.size(); ++i) {
        if (bq[i].is_zero()) continue;
        for (int j = 0; j < ngens_; ++j) (*gen_quotients)[j] += bq[i] * reps_[i][j];
      }
    }
    return rem;
  }

  bool contains(const FreeVec& v) const { return normal_form(v).is_zero(); }

 private:
  void refresh_leads() {
    lead_.clear();
    for (const auto& b : basis_) lead_.push_back(leading_modterm(b, order_));
  }

  // Reduce v against the current basis (leading terms only are enough for
  // correctness of Buchberger; we reduce fully to keep elements small).
  FreeVec reduce_full(const FreeVec& v, std::vector<Polynomial>* rep) const {
    FreeVec p = v;
    FreeVec rem(v.rank(), v.nvars());
    while (!p.is_zero()) {
      ModTerm t = leading_modterm(p, order_);
      Scalar c = p[t.comp].terms().at(t.mono);
      bool reduced = false;
      for (size_t i = 0; i < basis_.size(); ++i) {
        ModTerm lt = lead_[i];
        if (lt.comp != t.comp || !lt.mono.divides(t.mono)) continue;
        Scalar factor = c / basis_[i][lt.comp].terms().at(lt.mono);
        Monomial shift = t.mono.divide(lt.mono);
        p -= basis_[i].times_term(shift, factor);
        if (rep)
          for (int j = 0; j < ngens_; ++j)
            (*rep)[j] -= reps_[i][j].times_term(shift, factor);
        reduced = true;
        break;
      }
      if (!reduced) {
        rem[t.comp].add_term(t.mono, c);
        p[t.comp].add_term(t.mono, -c);
      }
    }
    return rem;
  }

  void buchberger() {
    refresh_leads();
    struct Pair {
      int deg;
      size_t i, j;
      bool operator<(const Pair& o) const {
        return std::tie(deg, i, j) < std::tie(o.deg, o.i, o.j);
      }
    };
    std::set<Pair> pairs;
    auto push_pairs_for = [&](size_t j) {
      for (size_t i = 0; i < j; ++i) {
        if (lead_[i].comp != lead_[j].comp) continue;
        Monomial l = Monomial::lcm(lead_[i].mono, lead_[j].mono);
        pairs.insert({l.total_degree(), i, j});
      }
    };
    for (size_t j = 0; j < basis_.size(); ++j) push_pairs_for(j);

    while (!pairs.empty()) {
      auto [deg, i, j] = *pairs.begin();
      pairs.erase(pairs.begin());
      const ModTerm &li = lead_[i], &lj = lead_[j];
      Monomial l = Monomial::lcm(li.mono, lj.mono);
      // Product criterion is only valid for rank-1 elements, or when both
      // generators are single terms (the S-vector is identically zero).
      bool single_i = single_term(basis_[i]), single_j = single_term(basis_[j]);
      if (single_i && single_j) continue;
      if (basis_[i].rank() == 1 && !single_i && !single_j &&
          Monomial::gcd(li.mono, lj.mono).is_one())
        continue;

      Scalar ci = basis_[i][li.comp].terms().at(li.mono);
      Scalar cj = basis_[j][lj.comp].terms().at(lj.mono);
      FreeVec s = basis_[i].times_term(l.divide(li.mono), ci.inverse()) -
                  basis_[j].times_term(l.divide(lj.mono), cj.inverse());
      std::vector<Polynomial> rep;
      if (track_) {
        rep.assign(ngens_, Polynomial(s.nvars()));
        for (int t = 0; t < ngens_; ++t)
          rep[t] = reps_[i][t].times_term(l.divide(li.mono), ci.inverse()) -
                   reps_[j][t].times_term(l.divide(lj.mono), cj.inverse());
      }
      FreeVec nf = reduce_full(s, track_ ? &rep : nullptr);
      if (nf.is_zero()) continue;
      basis_.push_back(nf);
      lead_.push_back(leading_modterm(nf, order_));
      if (track_) reps_.push_back(std::move(rep));
      push_pairs_for(basis_.size() - 1);
    }
  }

  static bool single_term(const FreeVec& v) {
    int nz = 0;
    for (const auto& p : v.coords()) {
      if (p.is_zero()) continue;
      ++nz;
      if (p.term_count() > 1) return false;
    }
    return nz == 1;
  }

  void interreduce() {
    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<size_t> keep;
    for (size_t a = 0; a < basis_.size(); ++a) {
      bool redundant = false;
      for (size_t b = 0; b < basis_.size(); ++b) {
        if (a == b) continue;
        if (lead_[b].comp != lead_[a].comp || !lead_[b].mono.divides(lead_[a].mono))
          continue;
        if (lead_[b].mono == lead_[a].mono && b > a) continue;  // keep the first
        redundant = true;
        break;
      }
      if (!redundant) keep.push_back(a);
    }
    std::vector<FreeVec> kept;
    std::vector<std::vector<Polynomial>> kept_reps;
    for (size_t i : keep) {
      kept.push_back(basis_[i]);
      if (track_) kept_reps.push_back(reps_[i]);
    }
    basis_ = std::move(kept);
    reps_ = std::move(kept_reps);
    refresh_leads();

    // tail-reduce each element against the others and normalize to monic;
    // minimality guarantees the leading term itself survives
    for (size_t i = 0; i < basis_.size(); ++i) {
      FreeVec p = basis_[i];
      FreeVec rem(p.rank(), p.nvars());
      std::vector<Polynomial> rep;
      if (track_) rep = reps_[i];
      while (!p.is_zero()) {
        ModTerm t = leading_modterm(p, order_);
        Scalar c = p[t.comp].terms().at(t.mono);
        bool reduced = false;
        for (size_t j = 0; j < basis_.size(); ++j) {
          if (j == i) continue;
          if (lead_[j].comp != t.comp || !lead_[j].mono.divides(t.mono)) continue;
          Scalar factor = c / basis_[j][lead_[j].comp].terms().at(lead_[j].mono);
          Monomial shift = t.mono.divide(lead_[j].mono);
          p -= basis_[j].times_term(shift, factor);
          if (track_)
            for (int g = 0; g < ngens_; ++g)
              rep[g] -= reps_[j][g].times_term(shift, factor);
          reduced = true;
          break;
        }
        if (!reduced) {
          rem[t.comp].add_term(t.mono, c);
          p[t.comp].add_term(t.mono, -c);
        }
      }
      ModTerm lt = leading_modterm(rem, order_);
      Scalar inv = rem[lt.comp].terms().at(lt.mono).inverse();
      basis_[i] = rem.times_term(Monomial(rem.nvars()), inv);
      lead_[i] = leading_modterm(basis_[i], order_);
      if (track_) {
        for (auto& q : rep) q = q.scaled(inv);
        reps_[i] = std::move(rep);
      }
    }

    // deterministic order: descending leading terms
    std::vector<size_t> idx(basis_.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
      return modterm_cmp(lead_[a], lead_[b], order_) > 0;
    });
    std::vector<FreeVec> sorted;
    std::vector<std::vector<Polynomial>> sorted_reps;
    for (size_t i : idx) {
      sorted.push_back(basis_[i]);
      if (track_) sorted_reps.push_back(reps_[i]);
    }
    basis_ = std::move(sorted);
    reps_ = std::move(sorted_reps);
    refresh_leads();
  }

  MonomialOrder order_;
  bool track_;
  int ngens_;
  Field field_;
  std::vector<FreeVec> basis_;
  std::vector<std::vector<Polynomial>> reps_;
  std::vector<ModTerm> lead_;
};

// ---------------------------------------------------------------------------
// monomial ideal combinatorics

inline std::vector<Monomial> minimalize_monomial_ideal(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& g : gens)
      if (g != m && g.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return mono_cmp(a, b, MonomialOrder::GrevLex) < 0;
  });
  return out;
}

inline bool monomial_ideal_member(const Monomial& m, const std::vector<Monomial>& gens) {
  for (const auto& g : gens)
    if (g.divides(m)) return true;
  return false;
}

inline std::vector<Monomial> intersect_monomial_ideals(const std::vector<Monomial>& a,
                                                       const std::vector<Monomial>& b) {
  std::vector<Monomial> out;
  for (const auto& g : a)
    for (const auto& h : b) out.push_back(Monomial::lcm(g, h));
  return minimalize_monomial_ideal(std::move(out));
}

inline std::vector<Monomial> monomial_colon(const std::vector<Monomial>& I,
                                            const std::vector<Monomial>& J) {
  // (I : J) = intersection over h in J of ideal({ g : h })
  std::optional<std::vector<Monomial>> acc;
  for (const auto& h : J) {
    std::vector<Monomial> part;
    for (const auto& g : I) part.push_back(g.colon(h));
    part = minimalize_monomial_ideal(std::move(part));
    acc = acc ? intersect_monomial_ideals(*acc, part) : part;
  }
  if (!acc) throw std::invalid_argument("monomial_colon: empty second ideal");
  return *acc;
}

inline bool is_monomial_ideal(const std::vector<Polynomial>& gens) {
  for (const auto& g : gens)
    if (!g.is_zero() && !g.is_monomial()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// ring-aware operations (quotients are flattened into the generator list)

inline std::vector<Polynomial> with_quotient(std::vector<Polynomial> gens,
                                             const RingDescriptor& ring) {
  for (const auto& q : ring.quotient_gens())
    gens.push_back(Polynomial::monomial(q, ring.field()));
  return gens;
}

inline std::vector<FreeVec> with_quotient_module(std::vector<FreeVec> gens, int rank,
                                                 const RingDescriptor& ring) {
  int nv = ring.nvars();
  for (const auto& q : ring.quotient_gens())
    for (int i = 0; i < rank; ++i) {
      FreeVec v(rank, nv);
      v[i] = Polynomial::monomial(q, ring.field());
      gens.push_back(v);
    }
  return gens;
}

inline std::vector<FreeVec> as_vectors(const std::vector<Polynomial>& ps) {
  std::vector<FreeVec> vs;
  vs.reserve(ps.size());
  for (const auto& p : ps) vs.push_back(FreeVec::from_poly(p));
  return vs;
}

/// Reduced Groebner basis of an ideal; quotient rings are handled by
/// appending the defining monomials.
inline std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens,
                                              MonomialOrder order,
                                              const RingDescriptor& ring) {
  if (ring.is_semigroup())
    throw std::invalid_argument(
        "groebner_basis: semigroup ring ideals are handled combinatorially");
  ModuleBasis gb(as_vectors(with_quotient(gens, ring)), order);
  std::vector<Polynomial> out;
  for (const auto& v : gb.basis()) out.push_back(v[0]);
  return out;
}

inline bool ideal_member(const Polynomial& p, const std::vector<Polynomial>& gens,
                         const RingDescriptor& ring,
                         MonomialOrder order = MonomialOrder::GrevLex) {
  ModuleBasis gb(as_vectors(with_quotient(gens, ring)), order);
  return gb.contains(FreeVec::from_poly(p));
}

inline bool module_member(const FreeVec& v, const std::vector<FreeVec>& gens,
                          const RingDescriptor& ring,
                          MonomialOrder order = MonomialOrder::GrevLex) {
  for (const auto& g : gens)
    if (g.rank() != v.rank())
      throw std::invalid_argument("module_member: rank mismatch");
  ModuleBasis gb(with_quotient_module(gens, v.rank(), ring), order);
  return gb.contains(v);
}

struct MembershipWitness {
  bool member = false;
  // quotients aligned with the generators that were passed in; the
  // flattened quotient relations are folded away.
  std::vector<Polynomial> coeffs;
};

/// Decides v in <gens> and, on success, returns polynomial coefficients
/// q with v = sum q_i gens_i modulo the ring's defining ideal.
inline MembershipWitness module_member_witness(const FreeVec& v,
                                               const std::vector<FreeVec>& gens,
                                               const RingDescriptor& ring,
                                               MonomialOrder order = MonomialOrder::GrevLex) {
  ModuleBasis gb(with_quotient_module(gens, v.rank(), ring), order, /*track=*/true);
  std::vector<Polynomial> q;
  FreeVec nf = gb.normal_form(v, &q);
  MembershipWitness w;
  w.member = nf.is_zero();
  if (w.member) w.coeffs.assign(q.begin(), q.begin() + gens.size());
  return w;
}

/// Radical membership by the Rabinowitsch trick: p in sqrt(I) iff
/// 1 in I + (1 - z p) in R[z].
inline bool radical_member(const Polynomial& p, const std::vector<Polynomial>& gens,
                           const RingDescriptor& ring) {
  int nv = ring.nvars();
  auto extend_poly = [&](const Polynomial& f) {
    Polynomial g(nv + 1);
    for (auto& [m, c] : f.terms()) {
      std::vector<int> e = m.exponents();
      e.push_back(0);
      g.add_term(Monomial(e), c);
    }
    return g;
  };
  std::vector<Polynomial> ext;
  for (const auto& g : with_quotient(gens, ring)) ext.push_back(extend_poly(g));
  std::vector<int> ze(nv + 1, 0);
  ze[nv] = 1;
  Field f = ring.field();
  Polynomial one = Polynomial::constant(Scalar::one(f), nv + 1);
  ext.push_back(one - extend_poly(p) * Polynomial::monomial(Monomial(ze), f));
  ModuleBasis gb(as_vectors(ext), MonomialOrder::GrevLex);
  return gb.contains(FreeVec::from_poly(one));
}

/// Exact division f / g when g divides f; throws otherwise.
inline Polynomial exact_divide(const Polynomial& f, const Polynomial& g,
                               MonomialOrder order = MonomialOrder::GrevLex) {
  if (g.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
  Polynomial rem = f, q(f.nvars());
  const Monomial lg = g.leading_monomial(order);
  const Scalar cg = g.leading_coefficient(order);
  while (!rem.is_zero()) {
    Monomial lr = rem.leading_monomial(order);
    if (!lg.divides(lr)) throw std::invalid_argument("exact_divide: not divisible");
    Scalar c = rem.terms().at(lr) / cg;
    Monomial s = lr.divide(lg);
    q.add_term(s, c);
    rem -= g.times_term(s, c);
  }
  return q;
}

/// Intersection of two ideals over a plain polynomial ring, by elimination
/// of an auxiliary variable placed first in lex order.
inline std::vector<Polynomial> intersect_ideals_poly(const std::vector<Polynomial>& I,
                                                     const std::vector<Polynomial>& J,
                                                     const PolyRing& ring) {
  int nv = ring.nvars();
  // variable layout of the extended ring: [T, x_1..x_n]
  auto lift = [&](const Polynomial& f, bool with_T, bool complement) {
    Polynomial g(nv + 1);
    for (auto& [m, c] : f.terms()) {
      std::vector<int> e(nv + 1, 0);
      for (int i = 0; i < nv; ++i) e[i + 1] = m[i];
      if (with_T || complement) {
        std::vector<int> eT = e;
        eT[0] = 1;
        g.add_term(Monomial(eT), c);
      }
      if (complement) g.add_term(Monomial(e), -c);  // (T - 1) f, sign immaterial
      if (!with_T && !complement) g.add_term(Monomial(e), c);
    }
    return g;
  };
  std::vector<Polynomial> gens;
  for (const auto& f : I) gens.push_back(lift(f, true, false));       // T f
  for (const auto& f : J) gens.push_back(lift(f, false, true));      // (T-1) f
  ModuleBasis gb(as_vectors(gens), MonomialOrder::Lex);
  std::vector<Polynomial> out;
  for (const auto& v : gb.basis()) {
    const Polynomial& p = v[0];
    bool has_T = false;
    for (auto& [m, c] : p.terms())
      if (m[0] > 0) {
        has_T = true;
        break;
      }
    if (!has_T) {
      Polynomial q(nv);
      for (auto& [m, c] : p.terms()) {
        std::vector<int> e(nv);
        for (int i = 0; i < nv; ++i) e[i] = m[i + 1];
        q.add_term(Monomial(e), c);
      }
      out.push_back(q);
    }
  }
  return out;
}

/// Ideal quotient (I : J). Monomial inputs use the exact combinatorial
/// route; otherwise falls back to elimination over the base polynomial ring.
inline std::vector<Polynomial> colon_ideal(const std::vector<Polynomial>& I,
                                           const std::vector<Polynomial>& J,
                                           const RingDescriptor& ring) {
  if (J.empty()) throw std::invalid_argument("colon_ideal: empty second ideal");
  std::vector<Polynomial> I_full = with_quotient(I, ring);
  if (is_monomial_ideal(I_full) && is_monomial_ideal(J)) {
    std::vector<Monomial> mi, mj;
    for (const auto& g : I_full)
      if (!g.is_zero()) mi.push_back(g.only_term().first);
    for (const auto& g : J)
      if (!g.is_zero()) mj.push_back(g.only_term().first);
    if (mj.empty()) throw std::invalid_argument("colon_ideal: zero second ideal");
    if (mi.empty()) return {};
    auto gens = monomial_colon(minimalize_monomial_ideal(mi), mj);
    std::vector<Polynomial> out;
    Field f = ring.field();
    for (const auto& m : gens) out.push_back(Polynomial::monomial(m, f));
    return out;
  }
  // general case: (I : J) = intersection over f in J of (1/f)(I cap (f))
  const PolyRing& base = ring.base_poly();
  std::optional<std::vector<Polynomial>> acc;
  for (const auto& f : J) {
    if (f.is_zero()) continue;
    auto meet = intersect_ideals_poly(I_full, {f}, base);
    std::vector<Polynomial> part;
    for (const auto& g : meet) part.push_back(exact_divide(g, f));
    acc = acc ? intersect_ideals_poly(*acc, part, base) : part;
  }
  if (!acc) throw std::invalid_argument("colon_ideal: zero second ideal");
  // present through a reduced basis for determinism
  return groebner_basis(*acc, MonomialOrder::GrevLex, RingDescriptor(base));
}

/// Monomial k-basis of an Artinian monomial quotient (the standard monomials).
inline std::vector<Monomial> standard_monomials(const MonomialQuotient& ring) {
  if (krull_dimension(ring) != 0)
    throw std::invalid_argument("standard_monomials: ring is not Artinian");
  int nv = ring.base.nvars();
  std::set<Monomial> seen;
  std::deque<Monomial> queue;
  Monomial one(nv);
  if (!monomial_ideal_member(one, ring.quotient)) {
    seen.insert(one);
    queue.push_back(one);
  }
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    for (int i = 0; i < nv; ++i) {
      std::vector<int> e = m.exponents();
      e[i] += 1;
      Monomial next{e};
      if (seen.count(next) || monomial_ideal_member(next, ring.quotient)) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return mono_cmp(a, b, MonomialOrder::GrevLex) < 0;
  });
  return out;
}

/// k-dimension of R/I for an ideal with finite colength, by counting
/// standard monomials of a reduced Groebner basis.
inline long quotient_length(const std::vector<Polynomial>& gens,
                            const RingDescriptor& ring) {
  auto gb = groebner_basis(gens, MonomialOrder::GrevLex, ring);
  std::vector<Monomial> leads;
  for (const auto& g : gb) {
    if (g.is_zero()) continue;
    Monomial lm = g.leading_monomial(MonomialOrder::GrevLex);
    if (lm.is_one()) return 0;  // unit ideal
    leads.push_back(lm);
  }
  MonomialQuotient artin{ring.base_poly(), minimalize_monomial_ideal(leads)};
  return static_cast<long>(standard_monomials(artin).size());
}

}  // namespace closurelab
