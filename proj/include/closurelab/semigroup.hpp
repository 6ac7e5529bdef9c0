#pragma once

#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "closurelab/ring.hpp"

namespace closurelab {

/// A numerical semigroup <a_1,...,a_k> with gcd 1, realized by a sieve up to
/// its conductor. Everything downstream (ideals, colons, closures) is exact
/// because the complement in N is finite.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<int> gens) : gens_(std::move(gens)) {
    if (gens_.empty())
      throw std::invalid_argument("NumericalSemigroup: no generators");
    int g = 0;
    for (int a : gens_) {
      if (a <= 0)
        throw std::invalid_argument("NumericalSemigroup: generators must be positive");
      g = std::gcd(g, a);
    }
    if (g != 1) throw std::invalid_argument("NumericalSemigroup: gcd must be 1");
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    sieve();
  }

  const std::vector<int>& generators() const { return gens_; }
  int multiplicity() const { return gens_.front(); }

  bool contains(long s) const {
    if (s < 0) return false;
    if (s >= conductor_) return true;
    return member_[static_cast<size_t>(s)];
  }

  const std::vector<int>& gaps() const { return gaps_; }
  /// Largest gap; -1 encodes "no gaps" (S = N, Frobenius number -infinity).
  int frobenius() const { return frobenius_; }
  /// Least c with c + N contained in S.
  int conductor() const { return conductor_; }

  bool operator==(const NumericalSemigroup& o) const { return gens_ == o.gens_; }

 private:
  void sieve() {
    int a0 = gens_.front();
    size_t bound = 64;
    while (true) {
      std::vector<bool> mem(bound, false);
      mem[0] = true;
      for (size_t s = 1; s < bound; ++s)
        for (int a : gens_)
          if (s >= static_cast<size_t>(a) && mem[s - a]) {
            mem[s] = true;
            break;
          }
      // done once a run of `a0` consecutive members appears
      int run = 0;
      for (size_t s = 0; s < bound; ++s) {
        run = mem[s] ? run + 1 : 0;
        if (run == a0) {
          size_t tail_start = s - a0 + 1;
          member_.assign(mem.begin(), mem.begin() + tail_start + 1);
          conductor_ = 0;
          for (size_t u = 0; u < tail_start; ++u)
            if (!mem[u]) conductor_ = static_cast<int>(u) + 1;
          gaps_.clear();
          for (int u = 0; u < conductor_; ++u)
            if (!mem[u]) gaps_.push_back(u);
          frobenius_ = gaps_.empty() ? -1 : gaps_.back();
          member_.resize(conductor_ + 1, true);
          return;
        }
      }
      bound *= 2;
    }
  }

  std::vector<int> gens_;
  std::vector<bool> member_;
  std::vector<int> gaps_;
  int frobenius_ = -1;
  int conductor_ = 0;
};

/// An ideal of the semigroup ring spanned by monomials t^u: a cofinite-above
/// exponent set, stored canonically as sporadic members below a threshold
/// plus "every semigroup element >= threshold".
class SemigroupIdeal {
 public:
  SemigroupIdeal(const NumericalSemigroup& S, std::set<int> sporadic, int threshold)
      : S_(&S), sporadic_(std::move(sporadic)), threshold_(threshold) {
    canonicalize();
  }

  static SemigroupIdeal from_generators(const NumericalSemigroup& S,
                                        const std::vector<int>& gens) {
    if (gens.empty()) return SemigroupIdeal(S, {}, std::numeric_limits<int>::max());
    for (int g : gens)
      if (!S.contains(g))
        throw std::invalid_argument("SemigroupIdeal: generator exponent not in S");
    int lo = *std::min_element(gens.begin(), gens.end());
    int thr = lo + S.conductor();
    std::set<int> sp;
    for (int u = lo; u < thr; ++u) {
      if (!S.contains(u)) continue;
      for (int g : gens)
        if (u >= g && S.contains(u - g)) {
          sp.insert(u);
          break;
        }
    }
    return SemigroupIdeal(S, std::move(sp), thr);
  }

  static SemigroupIdeal zero(const NumericalSemigroup& S) {
    return from_generators(S, {});
  }
  static SemigroupIdeal whole_ring(const NumericalSemigroup& S) {
    return SemigroupIdeal(S, {}, 0);
  }

  const NumericalSemigroup& semigroup() const { return *S_; }
  bool is_zero() const { return threshold_ == std::numeric_limits<int>::max(); }
  const std::set<int>& sporadic() const { return sporadic_; }
  int threshold() const { return threshold_; }

  bool contains(int u) const {
    if (u < 0 || !S_->contains(u)) return false;
    if (is_zero()) return false;
    return u >= threshold_ || sporadic_.count(u) > 0;
  }

  /// Least exponent (the t-adic valuation of the ideal).
  int min_exponent() const {
    if (!sporadic_.empty()) return *sporadic_.begin();
    if (is_zero()) throw std::logic_error("SemigroupIdeal: valuation of zero ideal");
    int u = threshold_;
    while (!S_->contains(u)) ++u;
    return u;
  }

  bool operator==(const SemigroupIdeal& o) const {
    return sporadic_ == o.sporadic_ && threshold_ == o.threshold_;
  }
  bool operator!=(const SemigroupIdeal& o) const { return !(*this == o); }

  bool contains_ideal(const SemigroupIdeal& o) const {
    if (o.is_zero()) return true;
    if (is_zero()) return false;
    for (int u : o.sporadic_)
      if (!contains(u)) return false;
    for (int u = o.threshold_; u < std::max(threshold_, o.threshold_); ++u)
      if (S_->contains(u) && !contains(u)) return false;
    return true;
  }

  /// Minimal monomial generators.
  std::vector<int> min_generators() const {
    if (is_zero()) return {};
    std::vector<int> mem = members_up_to(threshold_ + 2 * S_->conductor() +
                                         S_->generators().back() + 1);
    std::vector<int> gens;
    for (int u : mem) {
      bool generated = false;
      for (int v : gens)
        if (u >= v && S_->contains(u - v)) {
          generated = true;
          break;
        }
      if (!generated) gens.push_back(u);
    }
    return gens;
  }

  /// Ideal sum (as submodules of R: union of exponent sets).
  SemigroupIdeal plus(const SemigroupIdeal& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    std::set<int> sp = sporadic_;
    sp.insert(o.sporadic_.begin(), o.sporadic_.end());
    return SemigroupIdeal(*S_, std::move(sp), std::min(threshold_, o.threshold_));
  }

  /// Ideal product, via generators.
  SemigroupIdeal times(const SemigroupIdeal& o) const {
    if (is_zero() || o.is_zero()) return zero(*S_);
    std::vector<int> sums;
    for (int a : min_generators())
      for (int b : o.min_generators()) sums.push_back(a + b);
    return from_generators(*S_, sums);
  }

  /// Colon (this : other) = { u in S : u + other subset of this }.
  SemigroupIdeal colon(const SemigroupIdeal& o) const {
    if (o.is_zero())
      return whole_ring(*S_);  // (I : 0) = R
    if (is_zero()) return zero(*S_);
    // every u in S with u >= threshold qualifies
    std::set<int> sp;
    for (int u = 0; u < threshold_; ++u) {
      if (!S_->contains(u)) continue;
      bool ok = true;
      // only o-members below threshold_-u can fail
      for (int j : o.members_up_to(threshold_ - u))
        if (!contains(u + j)) {
          ok = false;
          break;
        }
      if (ok) sp.insert(u);
    }
    return SemigroupIdeal(*S_, std::move(sp), threshold_);
  }

  /// Integral closure: { u in S : u >= min exponent }, i.e. I k[[t]] cap R.
  SemigroupIdeal closure() const {
    if (is_zero()) return zero(*S_);
    return SemigroupIdeal(*S_, {}, min_exponent());
  }

  SemigroupIdeal intersect(const SemigroupIdeal& o) const {
    if (is_zero() || o.is_zero()) return zero(*S_);
    int thr = std::max(threshold_, o.threshold_);
    std::set<int> sp;
    for (int u = 0; u < thr; ++u)
      if (contains(u) && o.contains(u)) sp.insert(u);
    return SemigroupIdeal(*S_, std::move(sp), thr);
  }

  /// All members below the bound, ascending.
  std::vector<int> members_up_to(int bound) const {
    std::vector<int> out;
    for (int u = 0; u < bound; ++u)
      if (contains(u)) out.push_back(u);
    return out;
  }

  std::string str() const {
    if (is_zero()) return "{}";
    int tail = threshold_;
    while (!S_->contains(tail)) ++tail;  // first actual member of the tail
    std::ostringstream os;
    os << "{";
    for (int u : sporadic_) os << u << ",";
    os << "u in S : u >= " << tail << "}";
    return os.str();
  }

 private:
  void canonicalize() {
    if (is_zero()) {
      sporadic_.clear();
      return;
    }
    // fold sporadic members at/above the threshold into the tail
    for (auto it = sporadic_.begin(); it != sporadic_.end();)
      it = (*it >= threshold_) ? sporadic_.erase(it) : std::next(it);
    // shrink the threshold past semigroup members implied by sporadic ones
    while (true) {
      if (threshold_ == 0) break;
      int prev = threshold_ - 1;
      if (!S_->contains(prev)) {
        --threshold_;  // no semigroup element there; tail extends freely
        continue;
      }
      if (sporadic_.count(prev)) {
        sporadic_.erase(prev);
        --threshold_;
        continue;
      }
      break;
    }
  }

  const NumericalSemigroup* S_;
  std::set<int> sporadic_;
  int threshold_;
};

}  // namespace closurelab
