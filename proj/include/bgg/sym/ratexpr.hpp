#pragma once

// Normal form: num/den with integer polynomials over interned generators.
// Invariants: den is sqrt-free, gcd(num, den) = 1 (sqrt-aware), the integer
// contents are coprime and den has positive leading coefficient under the
// stable key order. Two RatExprs are equal as functions of independent
// generators iff they are structurally equal.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "bgg/sym/poly.hpp"

namespace bgg::sym {

class RatExpr {
 public:
  RatExpr() : den_(1) {}
  RatExpr(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit RatExpr(const mpz_class& c) : num_(c), den_(1) {}
  explicit RatExpr(const mpq_class& c);
  explicit RatExpr(const Poly& p) : num_(p), den_(1) {}
  static RatExpr gen(GenId g) { return RatExpr(Poly::gen(g)); }
  static RatExpr var(std::string_view name) { return gen(variable(name)); }
  // sqrt of a positive rational; square factors are extracted.
  static RatExpr sqrt_of(const mpq_class& q);
  static RatExpr fraction(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_one(); }
  std::optional<mpq_class> as_rational() const;
  std::vector<GenId> gens() const;

  RatExpr operator-() const;
  friend RatExpr operator+(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator-(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator*(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator/(const RatExpr& a, const RatExpr& b);
  RatExpr& operator+=(const RatExpr& b) { return *this = *this + b; }
  RatExpr& operator-=(const RatExpr& b) { return *this = *this - b; }
  RatExpr& operator*=(const RatExpr& b) { return *this = *this * b; }
  RatExpr& operator/=(const RatExpr& b) { return *this = *this / b; }
  RatExpr pow(long n) const;
  RatExpr inverse() const;

  friend bool operator==(const RatExpr& a, const RatExpr& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatExpr& a, const RatExpr& b) { return !(a == b); }

 private:
  Poly num_;
  Poly den_;
};

// Transcendental atom with folding of exp(0), log(1), sin(0), ...
RatExpr apply(Func f, const RatExpr& arg);
// Opaque single-argument function s^(order)(arg).
RatExpr apply_function(std::string_view name, unsigned order, const RatExpr& arg);
// Abstract smooth function of the chart, optionally differentiated.
RatExpr field_symbol(std::string_view name, std::vector<GenId> partials = {});

RatExpr diff(const RatExpr& e, GenId v);
RatExpr diff(const RatExpr& e, GenId v, unsigned times);

// Simultaneous substitution of generators (variables, or any other
// generator) followed by normalization. Atom and function arguments are
// substituted recursively.
RatExpr subst(const RatExpr& e, const std::vector<std::pair<GenId, RatExpr>>& bindings);

// Printed normal form in the expression grammar.
std::string to_string(const RatExpr& e);
std::string to_string(const Poly& p);

}  // namespace bgg::sym
