#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace closurelab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Coefficient field: the rationals (p == 0) or a prime field F_p.
struct Field {
  std::uint32_t p = 0;

  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;
};

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// An exact field element. Either a rational number or a residue mod a
/// prime p; the mode is carried by the value itself so mixed-mode
/// arithmetic is caught at run time. No floating point anywhere.
class Scalar {
 public:
  Scalar() : value_(0), p_(0) {}

  static Scalar zero(const Field& f) { return Scalar(BigRat(0), f.p); }
  static Scalar one(const Field& f) { return Scalar(BigRat(1), f.p); }

  static Scalar from_int(long v, const Field& f) {
    return Scalar(BigRat(v), f.p).normalized();
  }
  static Scalar from_rational(const BigRat& v, const Field& f) {
    return Scalar(v, f.p).normalized();
  }

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }
  std::uint32_t characteristic() const { return p_; }
  const BigRat& value() const { return value_; }

  Scalar operator-() const { return Scalar(-value_, p_).normalized(); }

  Scalar operator+(const Scalar& o) const {
    auto [a, b, p] = align(o);
    return Scalar(a + b, p).normalized();
  }
  Scalar operator-(const Scalar& o) const {
    auto [a, b, p] = align(o);
    return Scalar(a - b, p).normalized();
  }
  Scalar operator*(const Scalar& o) const {
    auto [a, b, p] = align(o);
    return Scalar(a * b, p).normalized();
  }
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    if (p_ == 0) return Scalar(BigRat(1) / value_, 0);
    std::int64_t a = numerator(value_).convert_to<std::int64_t>();
    return Scalar(BigRat(mod_inverse(a, p_)), p_);
  }

  bool operator==(const Scalar& o) const {
    if (is_zero() && o.is_zero()) return true;
    return p_ == effective_p(o) && o.p_ == effective_p(*this) && value_ == o.value_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const { return value_.str(); }

 private:
  Scalar(BigRat v, std::uint32_t p) : value_(std::move(v)), p_(p) {}

  // A literal zero carries no mode; it adopts the other operand's field.
  std::uint32_t effective_p(const Scalar& other) const {
    return (p_ == 0 && is_zero()) ? other.p_ : p_;
  }

  struct Aligned {
    BigRat a, b;
    std::uint32_t p;
  };
  Aligned align(const Scalar& o) const {
    std::uint32_t pa = effective_p(o), pb = o.effective_p(*this);
    if (pa != pb) throw std::invalid_argument("Scalar: mixed coefficient fields");
    return {value_, o.value_, pa};
  }

  static std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::domain_error("Scalar: division by zero mod p");
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (r != 1) throw std::domain_error("Scalar: modulus is not prime");
    if (t < 0) t += p;
    return t;
  }

  Scalar& normalize() {
    if (p_ != 0) {
      BigInt p(p_);
      BigInt n = numerator(value_) % p;
      if (n < 0) n += p;
      BigInt d = denominator(value_);
      if (d != 1) {
        BigInt dm = d % p;
        if (dm < 0) dm += p;
        std::int64_t inv = mod_inverse(dm.convert_to<std::int64_t>(), p_);
        n = (n * inv) % p;
      }
      value_ = BigRat(n);
    }
    return *this;
  }
  Scalar normalized() const {
    Scalar s = *this;
    s.normalize();
    return s;
  }

  BigRat value_;
  std::uint32_t p_;
};

}  // namespace closurelab
