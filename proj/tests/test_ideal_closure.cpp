#include <catch2/catch_amalgamated.hpp>

#include "closurelab/closure_search.hpp"
#include "closurelab/newton.hpp"
#include "closurelab/props.hpp"

using namespace closurelab;

namespace {

const Field QQ{};
const PolyRing R2{QQ, {"x", "y"}};
const RingDescriptor rd2{R2};

Monomial m2(int a, int b) { return Monomial(std::vector<int>{a, b}); }
Polynomial P(int a, int b) { return Polynomial::monomial(m2(a, b), QQ); }

}  // namespace

TEST_CASE("newton closure of the paper ideals") {
  REQUIRE(newton_closure({m2(2, 0), m2(0, 2)}, R2) ==
          std::vector<Monomial>{m2(0, 2), m2(1, 1), m2(2, 0)});
  REQUIRE(newton_closure({m2(3, 0), m2(0, 3)}, R2) ==
          std::vector<Monomial>{m2(0, 3), m2(1, 2), m2(2, 1), m2(3, 0)});
  REQUIRE(newton_closure({m2(4, 0)}, R2) == std::vector<Monomial>{m2(4, 0)});
  REQUIRE(newton_closure(std::vector<Monomial>{}, R2).empty());  // closure of 0 is 0
}

TEST_CASE("newton region facets carry the expected inequality") {
  NewtonRegion region({m2(3, 0), m2(0, 3)});
  bool found = false;
  for (const auto& [a, b, c] : region.facets())
    if (a == 1 && b == 1 && c == 3) found = true;
  REQUIRE(found);  // x + y >= 3 cuts out the diagonal
  REQUIRE(region.contains(m2(1, 2)));
  REQUIRE_FALSE(region.contains(m2(1, 1)));
}

TEST_CASE("facet membership agrees with the rational LP on a box") {
  TrialRng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto gens = rand_monomial_ideal(rng, 2, 4, 6);
    NewtonRegion region(gens);
    for (int a = 0; a <= 7; ++a)
      for (int b = 0; b <= 7; ++b)
        REQUIRE(region.contains(m2(a, b)) == region.contains_lp(m2(a, b)));
  }
}

TEST_CASE("newton closure works beyond two variables") {
  PolyRing R3{QQ, {"x", "y", "z"}};
  auto m3 = [](int a, int b, int c) { return Monomial(std::vector<int>{a, b, c}); };
  auto cl = newton_closure({m3(2, 0, 0), m3(0, 2, 0), m3(0, 0, 2)}, R3);
  REQUIRE(cl.size() == 6);  // the three squares and the three mixed products
  REQUIRE(monomial_ideal_member(m3(1, 1, 0), cl));
}

TEST_CASE("certificates for the paper memberships") {
  auto r1 = certify_ideal_member(P(1, 1), {P(2, 0), P(0, 2)}, 2, rd2);
  REQUIRE(r1.found);
  REQUIRE(r1.certificate->degree == 2);
  REQUIRE(verify_certificate(*r1.certificate));

  auto r2 = certify_ideal_member(P(1, 0), {P(1, 0)}, 1, rd2);
  REQUIRE(r2.found);
  REQUIRE(r2.certificate->degree == 1);

  auto r3 = certify_ideal_member(P(1, 0), {P(2, 0)}, 10, rd2);
  REQUIRE_FALSE(r3.found);
}

TEST_CASE("newton closure is idempotent and monotone on random ideals") {
  TrialRng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto I = rand_monomial_ideal(rng, 2, 4, 6);
    auto c = newton_closure(I, R2);
    REQUIRE(newton_closure(c, R2) == c);
    std::vector<Monomial> J = I;
    J.push_back(rand_monomial(rng, 2, 6, 1));
    auto cj = newton_closure(minimalize_monomial_ideal(J), R2);
    for (const auto& g : c) REQUIRE(monomial_ideal_member(g, cj));
  }
}

TEST_CASE("newton-certificate cross-oracle on random ideals") {
  TrialRng rng(9);
  for (int trial = 0; trial < 15; ++trial) {
    auto I = rand_monomial_ideal(rng, 2, 4, 6);
    auto closure = newton_closure(I, R2);
    std::vector<Polynomial> gens;
    for (const auto& g : I) gens.push_back(Polynomial::monomial(g, QQ));
    for (const auto& g : closure) {
      auto res = certify_ideal_member(Polynomial::monomial(g, QQ), gens, 6, rd2);
      REQUIRE(res.found);
      REQUIRE(verify_certificate(*res.certificate));
    }
    // random probes outside the closure never get a certificate
    for (int probe = 0; probe < 3; ++probe) {
      Monomial z = rand_monomial(rng, 2, 6);
      if (monomial_ideal_member(z, closure)) continue;
      auto res = certify_ideal_member(Polynomial::monomial(z, QQ), gens, 6, rd2);
      REQUIRE_FALSE(res.found);
    }
  }
}

TEST_CASE("semigroup ideal closures") {
  NumericalSemigroup S23({2, 3});
  auto I = SemigroupIdeal::from_generators(S23, {4, 7});
  auto c = I.closure();
  REQUIRE(c.contains(4));
  REQUIRE(c.contains(5));
  REQUIRE(c.contains(6));
  REQUIRE_FALSE(c.contains(3));
  REQUIRE(c.closure() == c);  // idempotent
  auto whole = SemigroupIdeal::from_generators(S23, {0});
  REQUIRE(whole.closure() == SemigroupIdeal::whole_ring(S23));
  // closure = { u in S : u >= min val } on random instances
  TrialRng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> gens;
    int count = rng.range(1, 3);
    for (int i = 0; i < count; ++i) {
      int s = rng.range(2, 9);
      while (!S23.contains(s)) ++s;
      gens.push_back(s);
    }
    auto J = SemigroupIdeal::from_generators(S23, gens);
    auto cj = J.closure();
    int lo = J.min_exponent();
    for (int u = 0; u < lo + 8; ++u)
      REQUIRE(cj.contains(u) == (S23.contains(u) && u >= lo));
  }
}

TEST_CASE("semigroup membership certificates") {
  SemigroupRing ring{QQ, {2, 3}};
  auto res = certify_semigroup_member(5, {4, 7}, 6, ring);
  REQUIRE(res.found);
  REQUIRE(res.certificate->degree == 2);  // (t^5)^2 = t^2 (t^4)^2
  REQUIRE(verify_certificate(*res.certificate));
}

TEST_CASE("reduction testing") {
  REQUIRE(is_reduction_monomial({m2(2, 0), m2(0, 2)},
                                {m2(2, 0), m2(1, 1), m2(0, 2)}, R2));
  REQUIRE_FALSE(is_reduction_monomial({m2(2, 0)}, {m2(2, 0), m2(0, 2)}, R2));
  REQUIRE(is_reduction_monomial({m2(2, 0)}, {m2(2, 0)}, R2));  // J = I
  REQUIRE_THROWS_AS(is_reduction_monomial({m2(1, 0)}, {m2(2, 0)}, R2),
                    std::invalid_argument);  // J not inside I
}

TEST_CASE("semiprime property on random monomial pairs") {
  TrialRng rng(21);
  auto prod = [](const std::vector<Monomial>& A, const std::vector<Monomial>& B) {
    std::vector<Monomial> out;
    for (const auto& a : A)
      for (const auto& b : B) out.push_back(a * b);
    return minimalize_monomial_ideal(out);
  };
  for (int trial = 0; trial < 25; ++trial) {
    auto I = rand_monomial_ideal(rng, 2, 3, 5);
    auto J = rand_monomial_ideal(rng, 2, 3, 5);
    auto lhs = newton_closure(prod(I, J), R2);
    auto rhs = newton_closure(prod(newton_closure(I, R2), newton_closure(J, R2)), R2);
    REQUIRE(lhs == rhs);
  }
}
