#pragma once

#include <cctype>
#include <string>

#include "closurelab/freevec.hpp"
#include "closurelab/ring.hpp"

namespace closurelab {

/// Syntax error with the offending position in the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  size_t position;
};

namespace detail {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : s_(text) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "'", i_);
  }
  size_t pos() const { return i_; }

  bool peek_ident() {
    skip_ws();
    return i_ < s_.size() &&
           (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_');
  }
  bool peek_digit() {
    skip_ws();
    return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
  }
  std::string ident() {
    skip_ws();
    if (!peek_ident()) throw ParseError("expected identifier", i_);
    size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) ||
                              s_[i_] == '_'))
      ++i_;
    return s_.substr(start, i_ - start);
  }
  long integer() {
    skip_ws();
    if (!peek_digit()) throw ParseError("expected integer", i_);
    long v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_] - '0');
      if (v > 1000000000L) throw ParseError("integer too large", i_);
      ++i_;
    }
    return v;
  }

 private:
  const std::string& s_;
  size_t i_ = 0;
};

// polynomial grammar; the '*' between factors is optional
inline Polynomial parse_poly_expr(Cursor& c, const std::vector<std::string>& vars,
                                  const Field& field);

inline Polynomial parse_factor(Cursor& c, const std::vector<std::string>& vars,
                               const Field& field) {
  const int nv = static_cast<int>(vars.size());
  if (c.accept('(')) {
    Polynomial p = parse_poly_expr(c, vars, field);
    c.expect(')');
    if (c.accept('^')) {
      long e = c.integer();
      p = p.pow(static_cast<int>(e));
    }
    return p;
  }
  if (c.peek_digit()) {
    long v = c.integer();
    return Polynomial::constant(Scalar::from_int(v, field), nv);
  }
  size_t at = c.pos();
  std::string name = c.ident();
  int idx = -1;
  for (int i = 0; i < nv; ++i)
    if (vars[i] == name) {
      idx = i;
      break;
    }
  if (idx < 0) throw ParseError("unknown variable '" + name + "'", at);
  long e = 1;
  if (c.accept('^')) e = c.integer();
  std::vector<int> exps(nv, 0);
  exps[idx] = static_cast<int>(e);
  return Polynomial::monomial(Monomial{exps}, field);
}

inline bool starts_factor(Cursor& c) {
  char ch = c.peek();
  return ch == '(' || std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
}

inline Polynomial parse_term(Cursor& c, const std::vector<std::string>& vars,
                             const Field& field) {
  Polynomial p = parse_factor(c, vars, field);
  while (true) {
    if (c.accept('*')) {
      p = p * parse_factor(c, vars, field);
    } else if (starts_factor(c)) {
      p = p * parse_factor(c, vars, field);
    } else {
      break;
    }
  }
  return p;
}

inline Polynomial parse_poly_expr(Cursor& c, const std::vector<std::string>& vars,
                                  const Field& field) {
  const int nv = static_cast<int>(vars.size());
  Polynomial p(nv);
  bool negate = false;
  if (c.accept('-'))
    negate = true;
  else
    c.accept('+');
  while (true) {
    Polynomial t = parse_term(c, vars, field);
    p += negate ? -t : t;
    if (c.accept('-')) {
      negate = true;
    } else if (c.accept('+')) {
      negate = false;
    } else {
      break;
    }
  }
  return p;
}

}  // namespace detail

/// `poly QQ [x,y]` | `quot QQ [x,y] / (x^2, x*y)` | `semigroup QQ <2,3>`,
/// with `Fp <prime>` usable in place of `QQ`.
inline RingDescriptor parse_ring(const std::string& text) {
  detail::Cursor c(text);
  size_t at = c.pos();
  std::string kind = c.ident();
  auto parse_field = [&]() {
    size_t fat = c.pos();
    std::string fs = c.ident();
    if (fs == "QQ") return Field{};
    if (fs == "Fp") {
      long p = c.integer();
      if (p < 2 || !is_prime_u32(static_cast<std::uint32_t>(p)))
        throw ParseError("Fp modulus must be prime", fat);
      return Field{static_cast<std::uint32_t>(p)};
    }
    throw ParseError("expected QQ or Fp", fat);
  };
  auto parse_vars = [&]() {
    c.expect('[');
    std::vector<std::string> vars;
    if (!c.accept(']')) {
      do {
        vars.push_back(c.ident());
      } while (c.accept(','));
      c.expect(']');
    }
    for (size_t i = 0; i < vars.size(); ++i)
      for (size_t j = i + 1; j < vars.size(); ++j)
        if (vars[i] == vars[j]) throw ParseError("duplicate variable name", at);
    return vars;
  };

  if (kind == "poly") {
    Field f = parse_field();
    auto vars = parse_vars();
    if (!c.done()) throw ParseError("trailing input", c.pos());
    return RingDescriptor(PolyRing{f, vars});
  }
  if (kind == "quot") {
    Field f = parse_field();
    auto vars = parse_vars();
    c.expect('/');
    c.expect('(');
    std::vector<Monomial> gens;
    if (!c.accept(')')) {
      do {
        size_t gat = c.pos();
        Polynomial p = detail::parse_poly_expr(c, vars, f);
        if (!p.is_monomial())
          throw ParseError("quotient generators must be monomials", gat);
        auto& [m, coeff] = p.only_term();
        if (!coeff.is_one())
          throw ParseError("quotient generators must be monic monomials", gat);
        gens.push_back(m);
      } while (c.accept(','));
      c.expect(')');
    }
    if (!c.done()) throw ParseError("trailing input", c.pos());
    return RingDescriptor(MonomialQuotient{PolyRing{f, vars}, gens});
  }
  if (kind == "semigroup") {
    Field f = parse_field();
    c.expect('<');
    std::vector<int> gens;
    do {
      gens.push_back(static_cast<int>(c.integer()));
    } while (c.accept(','));
    c.expect('>');
    if (!c.done()) throw ParseError("trailing input", c.pos());
    return RingDescriptor(SemigroupRing{f, gens});
  }
  throw ParseError("expected poly, quot, or semigroup", at);
}

inline Polynomial parse_polynomial(const std::string& text, const PolyRing& ring) {
  detail::Cursor c(text);
  Polynomial p = detail::parse_poly_expr(c, ring.vars, ring.field);
  if (!c.done()) throw ParseError("trailing input", c.pos());
  return p;
}

/// `(p, q, r)` or `()`; bare `p` is accepted as a singleton.
inline std::vector<Polynomial> parse_ideal(const std::string& text, const PolyRing& ring) {
  detail::Cursor c(text);
  std::vector<Polynomial> out;
  if (c.accept('(')) {
    if (!c.accept(')')) {
      do {
        out.push_back(detail::parse_poly_expr(c, ring.vars, ring.field));
      } while (c.accept(','));
      c.expect(')');
    }
    if (!c.done()) throw ParseError("trailing input", c.pos());
    return out;
  }
  out.push_back(parse_polynomial(text, ring));
  return out;
}

inline std::vector<Monomial> parse_monomial_ideal(const std::string& text,
                                                  const PolyRing& ring) {
  std::vector<Monomial> out;
  for (const auto& p : parse_ideal(text, ring)) {
    if (p.is_zero()) continue;
    if (!p.is_monomial())
      throw ParseError("expected monomial generators", 0);
    out.push_back(p.only_term().first);
  }
  return out;
}

/// A free-module element: a polynomial in the ring variables plus the
/// coordinate symbols e1..e<rank>, linear in the coordinates. For rank 1 a
/// plain polynomial (no `e1`) is also accepted.
inline FreeVec parse_vector(const std::string& text, const PolyRing& ring, int rank) {
  std::vector<std::string> vars = ring.vars;
  std::vector<std::string> coord_names;
  for (int i = 1; i <= rank; ++i) {
    std::string name = "e" + std::to_string(i);
    coord_names.push_back(name);
    vars.push_back(name);
  }
  detail::Cursor c(text);
  Polynomial p = detail::parse_poly_expr(c, vars, ring.field);
  if (!c.done()) throw ParseError("trailing input", c.pos());
  const int base = ring.nvars();
  FreeVec v(rank, base);
  bool saw_coord = false, saw_bare = false;
  for (auto& [m, coeff] : p.terms()) {
    int which = -1;
    for (int i = 0; i < rank; ++i) {
      int d = m[base + i];
      if (d == 0) continue;
      if (d > 1 || which >= 0)
        throw ParseError("vector entries must be linear in the coordinates", 0);
      which = i;
    }
    std::vector<int> e(base);
    for (int i = 0; i < base; ++i) e[i] = m[i];
    if (which < 0) {
      saw_bare = true;
      if (rank != 1)
        throw ParseError("term without a coordinate symbol in rank > 1", 0);
      v[0].add_term(Monomial{e}, coeff);
    } else {
      saw_coord = true;
      v[which].add_term(Monomial{e}, coeff);
    }
  }
  if (saw_bare && saw_coord)
    throw ParseError("mix of coordinate-free and coordinate terms", 0);
  return v;
}

inline std::vector<FreeVec> parse_vector_list(const std::string& text,
                                              const PolyRing& ring, int rank) {
  detail::Cursor c(text);
  std::vector<FreeVec> out;
  c.expect('(');
  if (c.accept(')')) return out;
  // split on top-level commas, then reuse the single-vector parser
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  size_t i = text.find('(');
  bool closed = false;
  for (++i; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '(') ++depth;
    if (ch == ')') {
      if (depth == 0) {
        closed = true;
        break;
      }
      --depth;
    }
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!closed) throw ParseError("expected ')'", text.size());
  parts.push_back(cur);
  for (const auto& part : parts) out.push_back(parse_vector(part, ring, rank));
  return out;
}

/// Semigroup-ring monomial `t^5` (also `t` or `1`); returns the exponent.
inline int parse_t_power(const std::string& text) {
  PolyRing t_ring{Field{}, {"t"}};
  Polynomial p = parse_polynomial(text, t_ring);
  if (!p.is_monomial())
    throw ParseError("expected a monomial t^s", 0);
  auto& [m, coeff] = p.only_term();
  if (!coeff.is_one()) throw ParseError("expected a monic monomial t^s", 0);
  return m[0];
}

inline std::vector<int> parse_t_ideal(const std::string& text) {
  PolyRing t_ring{Field{}, {"t"}};
  std::vector<int> out;
  for (const auto& p : parse_ideal(text, t_ring)) {
    if (p.is_zero()) continue;
    if (!p.is_monomial()) throw ParseError("expected monomials t^s", 0);
    auto& [m, coeff] = p.only_term();
    if (!coeff.is_one()) throw ParseError("expected monic monomials t^s", 0);
    out.push_back(m[0]);
  }
  return out;
}

}  // namespace closurelab
