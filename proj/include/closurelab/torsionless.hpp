#pragma once

#include "closurelab/module_closure.hpp"

namespace closurelab {

/// A finite truncation of the presentation F/U of the injective hull of the
/// residue field over a two-variable polynomial ring: free generators
/// t_1..t_N with relations a_i = x^i t_i, b_i = y^i t_i (i <= N) and
/// c_i = xy t_{i+1} - t_i (i < N). The elements d_i = (xy)^i t_{2i} - t_i
/// lie in U via the telescoping identity d_i = sum_j (xy)^j c_{i+j}.
struct EPresentationTruncation {
  int N = 0;
  PolyRing ring;                     // two variables
  std::vector<FreeVec> relations;    // a_1..a_N, b_1..b_N, c_1..c_{N-1}

  int a_index(int i) const { return i - 1; }
  int b_index(int i) const { return N + i - 1; }
  int c_index(int i) const { return 2 * N + i - 1; }

  const FreeVec& a(int i) const { return relations[a_index(i)]; }
  const FreeVec& b(int i) const { return relations[b_index(i)]; }
  const FreeVec& c(int i) const { return relations[c_index(i)]; }

  Monomial xy_power(int k) const {
    return Monomial(std::vector<int>{k, k});
  }

  /// d_i = (xy)^i t_{2i} - t_i as an element of F.
  FreeVec d_element(int i) const {
    const Field f = ring.field;
    FreeVec v(N, 2);
    v[2 * i - 1] = Polynomial::monomial(xy_power(i), f);
    v[i - 1] = Polynomial::constant(-Scalar::one(f), 2);
    return v;
  }

  /// The telescoping decomposition d_i = sum_{j=0}^{i-1} (xy)^j c_{i+j},
  /// as (c-relation index, coefficient) pairs.
  std::vector<std::pair<int, Polynomial>> d_decomposition(int i) const {
    const Field f = ring.field;
    std::vector<std::pair<int, Polynomial>> out;
    for (int j = 0; j < i; ++j)
      out.push_back({c_index(i + j), Polynomial::monomial(xy_power(j), f)});
    return out;
  }
};

/// Builds the truncation at level N and verifies, both by symbolic expansion
/// of the telescoping identity and by Groebner module membership, that
/// d_i lies in U for every i with 2i <= N.
inline EPresentationTruncation build_truncation(int N, const PolyRing& ring) {
  if (N < 1) throw std::invalid_argument("build_truncation: N must be positive");
  if (ring.nvars() != 2)
    throw std::invalid_argument("build_truncation: two-variable rings only");
  const Field f = ring.field;
  EPresentationTruncation tr;
  tr.N = N;
  tr.ring = ring;
  auto unit_at = [&](int i, const Monomial& m) {
    FreeVec v(N, 2);
    v[i - 1] = Polynomial::monomial(m, f);
    return v;
  };
  for (int i = 1; i <= N; ++i)
    tr.relations.push_back(unit_at(i, Monomial(std::vector<int>{i, 0})));
  for (int i = 1; i <= N; ++i)
    tr.relations.push_back(unit_at(i, Monomial(std::vector<int>{0, i})));
  for (int i = 1; i < N; ++i) {
    FreeVec v(N, 2);
    v[i] = Polynomial::monomial(tr.xy_power(1), f);
    v[i - 1] = Polynomial::constant(-Scalar::one(f), 2);
    tr.relations.push_back(v);
  }

  RingDescriptor rd(ring);
  for (int i = 1; 2 * i <= N; ++i) {
    FreeVec d = tr.d_element(i);
    // telescoping identity, checked by pure expansion
    FreeVec sum(N, 2);
    for (const auto& [ci, coeff] : tr.d_decomposition(i))
      sum += tr.relations[ci].times_poly(coeff);
    if (sum != d)
      throw std::logic_error("build_truncation: telescoping identity failed");
    // independent route: Groebner membership in U
    if (!module_member(d, tr.relations, rd))
      throw std::logic_error("build_truncation: d_i is not in U");
  }
  return tr;
}

/// Expands t_i^2 + 2 d_i t_i + (d_i^2 - a_{2i} b_{2i}) in the symmetric
/// algebra and confirms it is identically zero.
inline bool verify_quadratic_identity(int i, const EPresentationTruncation& tr) {
  if (i < 1 || 2 * i > tr.N)
    throw std::invalid_argument("verify_quadratic_identity: need 2i <= N");
  SymAlgebraContext ctx(RingDescriptor(tr.ring), tr.N);
  const Field f = tr.ring.field;
  Polynomial t_i = ctx.linear_form(FreeVec::unit(tr.N, i - 1, 2, f));
  Polynomial d_i = ctx.linear_form(tr.d_element(i));
  Polynomial a2i = ctx.linear_form(tr.a(2 * i));
  Polynomial b2i = ctx.linear_form(tr.b(2 * i));
  Polynomial two = Polynomial::constant(Scalar::from_int(2, f), ctx.flat_nvars());
  Polynomial expr = t_i * t_i + two * d_i * t_i + d_i * d_i - a2i * b2i;
  return expr.is_zero();
}

/// The explicit certificate behind the quadratic identity: mu * t_i is
/// integral over U with a_1 = 2 mu d_i (a combination of c's by telescoping)
/// and a_2 = mu^2 (d_i^2 - a_{2i} b_{2i}), both in the required j-fold
/// product form. `generators` must be the truncation's relation list.
inline IntegralityCertificate quadratic_certificate(int i,
                                                    const EPresentationTruncation& tr,
                                                    const Monomial& mu) {
  if (i < 1 || 2 * i > tr.N)
    throw std::invalid_argument("quadratic_certificate: need 2i <= N");
  const Field f = tr.ring.field;
  IntegralityCertificate cert;
  cert.ring = RingDescriptor(tr.ring);
  cert.rank = tr.N;
  cert.element = FreeVec::unit(tr.N, i - 1, 2, f).times_term(mu, Scalar::one(f));
  cert.generators = tr.relations;
  cert.degree = 2;
  cert.coefficients.resize(2);
  cert.coefficients[0].power = 1;
  cert.coefficients[1].power = 2;

  auto decomp = tr.d_decomposition(i);
  for (const auto& [ci, coeff] : decomp) {
    Polynomial c2 = coeff.times_term(mu, Scalar::from_int(2, f));
    cert.coefficients[0].terms.push_back({{ci}, c2});
  }
  // d_i^2 expands over pairs of c-relations
  Monomial mu2 = mu * mu;
  for (size_t s = 0; s < decomp.size(); ++s)
    for (size_t t = s; t < decomp.size(); ++t) {
      Polynomial coeff = decomp[s].second * decomp[t].second;
      Scalar mult = Scalar::from_int(s == t ? 1 : 2, f);
      std::vector<int> idx = {decomp[s].first, decomp[t].first};
      std::sort(idx.begin(), idx.end());
      cert.coefficients[1].terms.push_back({idx, coeff.times_term(mu2, mult)});
    }
  cert.coefficients[1].terms.push_back(
      {{tr.a_index(2 * i), tr.b_index(2 * i)},
       Polynomial::term(mu2, -Scalar::one(f))});
  std::string why;
  if (!verify_certificate(cert, &why))
    throw std::logic_error("quadratic_certificate: expansion failed: " + why);
  return cert;
}

/// Macaulay inverse system of an m-primary monomial ideal over k[x,y]: the
/// k-basis of (0 :_E I) is the set of dual monomials complementary to I, and
/// its generators under contraction are the maximal ones, i.e. the socle of
/// R/I. By duality dim_k (0 :_E I) = dim_k R/I.
struct InverseSystem {
  std::vector<Monomial> basis;       // dual monomials x^{-a} y^{-b} as (a, b)
  std::vector<Monomial> generators;  // maximal under divisibility
  int socle_dim = 0;
};

inline InverseSystem inverse_system(const std::vector<Monomial>& ideal,
                                    const PolyRing& ring) {
  if (ring.nvars() != 2)
    throw std::invalid_argument("inverse_system: two-variable rings only");
  MonomialQuotient q{ring, minimalize_monomial_ideal(ideal)};
  if (krull_dimension(q) != 0)
    throw std::invalid_argument("inverse_system: ideal is not m-primary");
  InverseSystem inv;
  inv.basis = standard_monomials(q);
  for (const auto& m : inv.basis) {
    bool maximal = true;
    for (int v = 0; v < 2 && maximal; ++v) {
      std::vector<int> e = m.exponents();
      e[v] += 1;
      if (!monomial_ideal_member(Monomial{e}, q.quotient)) maximal = false;
    }
    if (maximal) inv.generators.push_back(m);
  }
  inv.socle_dim = static_cast<int>(inv.generators.size());
  return inv;
}

/// The data realizing M = R/I as T/L with L <= T torsionless and T integral
/// over L: one truncation block per inverse-system generator, L the direct
/// sum of the block relation modules inside the free module G, T = L + R w
/// for the embedded generator w, plus the verification package.
struct TorsionlessWitness {
  PolyRing ring;
  std::vector<Monomial> ideal;           // I, minimal generators
  int blocks = 0;                        // n, the number of E-copies
  int truncation = 0;                    // N per block
  std::vector<FreeVec> L_gens;           // relations of all blocks in rank n*N
  FreeVec generator;                     // w, a lift of the generator of M
  IntegralityCertificate certificate;    // w integral over L
  std::vector<Polynomial> colon_gens;    // computed (L : w); must equal I
  long length = 0;                       // dim_k T/L = dim_k R/I
};

/// Re-runs every check of a witness from scratch: the certificate expands to
/// zero over the stored generators, I w lies in L, (L : w) equals I, and the
/// length matches. Independent of how the witness was produced.
inline bool verify_witness(const TorsionlessWitness& w, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  RingDescriptor rd(w.ring);
  const Field f = w.ring.field;
  // certificate really is about w over L
  if (w.certificate.element != w.generator) return fail("certificate element is not w");
  if (w.certificate.generators != w.L_gens) return fail("certificate generators are not L");
  std::string cert_why;
  if (!verify_certificate(w.certificate, &cert_why))
    return fail("certificate: " + cert_why);
  // forward: I w inside L
  for (const auto& g : w.ideal) {
    FreeVec gw = w.generator.times_term(g, Scalar::one(f));
    if (!module_member(gw, w.L_gens, rd)) return fail("I w is not inside L");
  }
  // backward: (L : w) equals I
  std::vector<Polynomial> I_polys;
  for (const auto& g : w.ideal) I_polys.push_back(Polynomial::monomial(g, f));
  for (const auto& c : w.colon_gens)
    if (!ideal_member(c, I_polys, rd)) return fail("(L : w) escapes I");
  for (const auto& g : I_polys)
    if (!ideal_member(g, w.colon_gens, rd)) return fail("I escapes (L : w)");
  // lengths agree, computed through Groebner normal forms on both sides
  if (quotient_length(I_polys, rd) != w.length) return fail("length of R/I is off");
  if (quotient_length(w.colon_gens, rd) != w.length)
    return fail("length of T/L is off");
  return true;
}

/// Generators of (L : w) = ker(R -> G/L, 1 -> w), by eliminating the module
/// positions from the syzygy module of L and w.
inline std::vector<Polynomial> module_colon_cyclic(const FreeVec& w,
                                                   const std::vector<FreeVec>& L,
                                                   const RingDescriptor& ring) {
  const int rank = w.rank();
  const Field f = ring.field();
  const int nv = ring.nvars();
  auto extend = [&](const FreeVec& v, const Polynomial& tail) {
    std::vector<Polynomial> coords = v.coords();
    coords.push_back(tail);
    return FreeVec(std::move(coords));
  };
  std::vector<FreeVec> gens;
  for (const auto& l : L) gens.push_back(extend(l, Polynomial(nv)));
  gens.push_back(extend(w, Polynomial::constant(-Scalar::one(f), nv)));
  // quotient relations only touch the module positions, not the tail
  for (const auto& q : ring.quotient_gens())
    for (int i = 0; i < rank; ++i) {
      FreeVec v(rank + 1, nv);
      v[i] = Polynomial::monomial(q, f);
      gens.push_back(v);
    }
  ModuleBasis gb(gens, MonomialOrder::GrevLex);
  std::vector<Polynomial> out;
  for (const auto& v : gb.basis()) {
    bool module_part = false;
    for (int i = 0; i < rank; ++i)
      if (!v[i].is_zero()) {
        module_part = true;
        break;
      }
    if (!module_part && !v[rank].is_zero()) out.push_back(v[rank]);
  }
  return out;
}

/// Builds the torsionless representation of M = R/I for an m-primary
/// monomial ideal over QQ[x,y]: embeds M into E^n through the inverse
/// system, truncates at N = 2 * (max t-index needed), certifies the embedded
/// generator over the block relations, and verifies the whole package.
/// Verification failure aborts: unverified data is never returned.
inline TorsionlessWitness represent_torsionless(const std::vector<Monomial>& ideal,
                                                const PolyRing& ring,
                                                int max_degree = 6) {
  if (ring.nvars() != 2)
    throw std::invalid_argument("represent_torsionless: two-variable rings only");
  const Field f = ring.field;
  InverseSystem inv = inverse_system(ideal, ring);
  const int n = inv.socle_dim;

  // block l realizes the dual monomial (a, b) as x^b y^a t_{a+b+1}
  int i_max = 1;
  for (const auto& g : inv.generators)
    i_max = std::max(i_max, g.total_degree() + 1);
  const int N = 2 * i_max;
  EPresentationTruncation tr = build_truncation(N, ring);

  TorsionlessWitness w;
  w.ring = ring;
  w.ideal = minimalize_monomial_ideal(ideal);
  w.blocks = n;
  w.truncation = N;

  const int G_rank = n * N;
  auto embed_block = [&](const FreeVec& v, int block) {
    FreeVec out(G_rank, 2);
    for (int i = 0; i < N; ++i) out[block * N + i] = v[i];
    return out;
  };
  for (int block = 0; block < n; ++block)
    for (const auto& rel : tr.relations) w.L_gens.push_back(embed_block(rel, block));

  FreeVec gen(G_rank, 2);
  for (int block = 0; block < n; ++block) {
    const Monomial& dual = inv.generators[block];
    int a = dual[0], b = dual[1];
    int idx = a + b;  // t_{a+b+1} has position a+b within the block
    std::vector<int> e = {b, a};
    gen[block * N + idx] = Polynomial::monomial(Monomial{e}, f);
  }
  w.generator = gen;

  if (n == 1) {
    // single block: the scaled quadratic identity is the certificate
    const Monomial& dual = inv.generators[0];
    std::vector<int> e = {dual[1], dual[0]};
    w.certificate = quadratic_certificate(dual.total_degree() + 1, tr, Monomial{e});
  } else {
    auto res = free_closure_member(w.generator, w.L_gens, max_degree, RingDescriptor(ring));
    if (!res.found)
      throw std::logic_error(
          "represent_torsionless: no certificate for w within the degree bound");
    w.certificate = std::move(*res.certificate);
  }

  w.colon_gens = module_colon_cyclic(w.generator, w.L_gens, RingDescriptor(ring));
  std::vector<Polynomial> I_polys;
  for (const auto& g : w.ideal) I_polys.push_back(Polynomial::monomial(g, f));
  w.length = quotient_length(I_polys, RingDescriptor(ring));

  std::string why;
  if (!verify_witness(w, &why))
    throw std::logic_error("represent_torsionless: verification failed: " + why);
  return w;
}

}  // namespace closurelab
