#include <catch2/catch_amalgamated.hpp>

#include "closurelab/props.hpp"
#include "closurelab/test_ideals.hpp"

using namespace closurelab;

namespace {

const Field QQ{};
const PolyRing R2{QQ, {"x", "y"}};

Monomial m1(int a) { return Monomial(std::vector<int>{a}); }
Monomial m2(int a, int b) { return Monomial(std::vector<int>{a, b}); }

}  // namespace

TEST_CASE("socle computations") {
  MonomialQuotient A{PolyRing{QQ, {"x"}}, {m1(3)}};
  auto s1 = socle(A);
  REQUIRE(s1.k_dimension == 1);
  REQUIRE(s1.generators == std::vector<Monomial>{m1(2)});

  MonomialQuotient B{R2, {m2(2, 0), m2(0, 2)}};
  auto s2 = socle(B);
  REQUIRE(s2.k_dimension == 1);
  REQUIRE(s2.generators == std::vector<Monomial>{m2(1, 1)});

  // a field: socle is the unit ideal
  MonomialQuotient K{PolyRing{QQ, {"x"}}, {m1(1)}};
  auto s3 = socle(K);
  REQUIRE(s3.k_dimension == 1);
  REQUIRE(s3.generators == std::vector<Monomial>{m1(0)});

  MonomialQuotient line{R2, {m2(1, 0)}};
  REQUIRE_THROWS_AS(socle(line), std::invalid_argument);

  // socle generators are killed by every variable
  TrialRng rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    MonomialQuotient C = rand_artinian_quotient(rng, QQ);
    auto s = socle(C);
    for (const auto& g : s.generators)
      for (int v = 0; v < 2; ++v) {
        std::vector<int> e = g.exponents();
        e[v] += 1;
        REQUIRE(monomial_ideal_member(Monomial{e}, C.quotient));
      }
  }
}

TEST_CASE("socle is independent of variable ordering") {
  MonomialQuotient A{R2, {m2(3, 0), m2(1, 1), m2(0, 2)}};
  PolyRing R2r{QQ, {"y", "x"}};
  MonomialQuotient B{R2r, {m2(0, 3), m2(1, 1), m2(2, 0)}};  // same ring, swapped
  auto sa = socle(A);
  auto sb = socle(B);
  REQUIRE(sa.k_dimension == sb.k_dimension);
  std::vector<Monomial> swapped;
  for (const auto& g : sb.generators)
    swapped.push_back(m2(g[1], g[0]));
  REQUIRE(minimalize_monomial_ideal(swapped) == sa.generators);
}

TEST_CASE("tau_M in dimension zero equals the socle") {
  MonomialQuotient A{PolyRing{QQ, {"x"}}, {m1(3)}};
  REQUIRE(tau_M_dim0(A) == std::vector<Monomial>{m1(2)});
  MonomialQuotient B{R2, {m2(2, 0), m2(1, 1), m2(0, 2)}};
  REQUIRE(tau_M_dim0(B) == std::vector<Monomial>{m2(0, 1), m2(1, 0)});
  TrialRng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    MonomialQuotient C = rand_artinian_quotient(rng, QQ);
    REQUIRE(tau_M_dim0(C) == socle(C).generators);
  }
}

TEST_CASE("matlis dual basics") {
  MonomialQuotient A{R2, {m2(2, 0), m2(1, 1), m2(0, 2)}};
  auto E = matlis_dual(A);
  REQUIRE(E.dim() == static_cast<int>(standard_monomials(A).size()));
  // (0 :_E m) is one-dimensional: only the dual of 1 is killed by both variables
  int killed = 0;
  for (int i = 0; i < E.dim(); ++i) {
    bool dead = !E.act(m2(1, 0), i).has_value() && !E.act(m2(0, 1), i).has_value();
    if (dead) ++killed;
  }
  REQUIRE(killed == 1);
}

TEST_CASE("frobenius numbers and conductors") {
  auto c1 = frobenius_and_conductor({2, 3});
  REQUIRE(c1.frobenius == 1);
  REQUIRE(c1.threshold == 2);
  REQUIRE(c1.gaps == std::vector<int>{1});

  auto c2 = frobenius_and_conductor({3, 5});
  REQUIRE(c2.frobenius == 7);
  REQUIRE(c2.threshold == 8);
  REQUIRE(c2.gaps == std::vector<int>{1, 2, 4, 7});

  auto c3 = frobenius_and_conductor({3, 4, 5});
  REQUIRE(c3.frobenius == 2);
  REQUIRE(c3.threshold == 3);

  auto c4 = frobenius_and_conductor({1});
  REQUIRE(c4.frobenius == -1);  // S = N
  REQUIRE(c4.threshold == 0);
  REQUIRE(c4.gaps.empty());

  REQUIRE_THROWS_AS(frobenius_and_conductor({2, 4}), std::invalid_argument);
}

TEST_CASE("tau_I sampling in dimension one") {
  SemigroupRing S23{QQ, {2, 3}};
  auto r1 = tau_I_sample_dim1(S23, {2});
  REQUIRE(r1.equals_conductor);

  SemigroupRing S35{QQ, {3, 5}};
  auto r2 = tau_I_sample_dim1(S35, {3});
  REQUIRE_FALSE(r2.equals_conductor);  // the single colon still contains t^6
  auto r3 = tau_I_sample_dim1(S35, {3, 5});
  REQUIRE(r3.equals_conductor);

  SemigroupRing S1{QQ, {1}};
  auto r4 = tau_I_sample_dim1(S1, {1});
  REQUIRE(r4.tail_from == 0);  // whole ring: every colon is R

  REQUIRE_THROWS_AS(tau_I_sample_dim1(S35, {4}), std::invalid_argument);
}

TEST_CASE("the dimension >= 2 vanishing chain") {
  auto chain = tau_upper_bound_dim2(R2, 4);
  REQUIRE(chain.stages.size() == 4);
  REQUIRE(chain.stages[0].colon_gens == std::vector<Monomial>{m2(0, 1), m2(1, 0)});
  REQUIRE(chain.stages[1].colon_gens == std::vector<Monomial>{m2(0, 2), m2(2, 0)});
  for (const auto& st : chain.stages) {
    REQUIRE(st.contained);
    REQUIRE(st.certificate.degree == 2);
    REQUIRE(verify_certificate(st.certificate));
  }
  // the computable shadow of tau = 0: the intersection sits inside (x^4, y^4)
  for (const auto& g : chain.intersection)
    REQUIRE(monomial_ideal_member(g, {m2(4, 0), m2(0, 4)}));
  REQUIRE_THROWS_AS(tau_upper_bound_dim2(PolyRing{QQ, {"x"}}, 2), std::invalid_argument);
}

TEST_CASE("local cohomology stage probes") {
  auto p1 = lc_stage_probe(R2, {0, 1}, 1);
  REQUIRE(p1.ann_gens == std::vector<Monomial>{m2(0, 0)});  // (x,y) is closed
  REQUIRE(p1.transition_ok);

  auto p2 = lc_stage_probe(R2, {0, 1}, 2);
  REQUIRE(p2.closure_gens == std::vector<Monomial>{m2(0, 2), m2(1, 1), m2(2, 0)});
  REQUIRE(p2.ann_gens == std::vector<Monomial>{m2(0, 1), m2(1, 0)});
  REQUIRE(p2.transition_ok);

  PolyRing R3{QQ, {"x", "y", "z"}};
  auto p3 = lc_stage_probe(R3, {0, 1, 2}, 2);
  REQUIRE(p3.transition_ok);

  REQUIRE_THROWS_AS(lc_stage_probe(R2, {0, 0}, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(lc_stage_probe(R2, {0, 1}, 0), std::invalid_argument);
}

TEST_CASE("conductor sits inside every sampled colon") {
  TrialRng rng(47);
  static const std::vector<std::vector<int>> semis = {{2, 3}, {3, 5}, {3, 4, 5}, {2, 7}};
  for (int trial = 0; trial < 12; ++trial) {
    auto gens = semis[static_cast<size_t>(rng.range(0, 3))];
    SemigroupRing ring{QQ, gens};
    NumericalSemigroup S(gens);
    std::vector<int> exps;
    int s = rng.range(1, S.conductor() + 6);
    while (!S.contains(s) || s == 0) ++s;
    exps.push_back(s);
    // throws internally if the sandwich fails
    auto r = tau_I_sample_dim1(ring, exps);
    REQUIRE(r.conductor_threshold == S.conductor());
  }
}
