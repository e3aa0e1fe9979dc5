#pragma once

// Sparse multivariate polynomials with integer coefficients over interned
// generators. Terms are kept sorted in decreasing lex order (smaller GenId is
// more significant), so the front term is the leading term.

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bgg/sym/generators.hpp"

namespace bgg::sym {

class Monomial {
 public:
  using Factor = std::pair<GenId, std::uint32_t>;
  using Storage = boost::container::small_vector<Factor, 4>;

  Monomial() = default;
  static Monomial of(GenId g, std::uint32_t e = 1);

  bool is_one() const { return f_.empty(); }
  std::uint32_t degree(GenId g) const;
  std::uint32_t total_degree() const;
  const Storage& factors() const { return f_; }

  bool divides(const Monomial& other) const;
  // this / other; requires other.divides(*this).
  Monomial quotient(const Monomial& other) const;
  Monomial without(GenId g) const;
  Monomial with(GenId g, std::uint32_t e) const;

  bool has_sqrt() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  friend class Poly;
  friend int compare(const Monomial&, const Monomial&);
  friend Monomial multiply(const Monomial&, const Monomial&, unsigned long& factor);
  Storage f_;
};

// Lex comparison: positive when a > b.
int compare(const Monomial& a, const Monomial& b);

// a*b with s_p^2 -> p reduction; the reduced primes are multiplied into factor.
Monomial multiply(const Monomial& a, const Monomial& b, unsigned long& factor);

struct Term {
  Monomial m;
  mpz_class c;
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(const mpz_class& c);
  explicit Poly(long c) : Poly(mpz_class(c)) {}
  static Poly gen(GenId g, std::uint32_t e = 1);
  static Poly term(const Monomial& m, const mpz_class& c);
  // Takes arbitrary terms, sorts and combines them.
  static Poly from_terms(std::vector<Term> terms);
  // Terms already sorted, combined and nonzero.
  static Poly from_sorted(std::vector<Term> terms);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return t_.size() == 1; }
  mpz_class constant_value() const;  // requires is_constant()
  std::size_t size() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }
  const Term& leading() const { return t_.front(); }

  std::vector<GenId> gens() const;  // sorted by id
  bool has_gen(GenId g) const;
  bool has_sqrt() const;
  std::uint32_t degree(GenId g) const;
  std::uint32_t total_degree() const;

  mpz_class content() const;  // positive gcd of coefficients; 0 for zero
  Poly primitive() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const mpz_class& c);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  Poly pow(unsigned n) const;
  // Exact division of every coefficient by c.
  Poly divexact(const mpz_class& c) const;
  Poly mul_term(const Monomial& m, const mpz_class& c) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative(GenId g) const;

  // Coefficients with respect to g: result[k] is the coefficient of g^k.
  std::vector<Poly> coeffs_in(GenId g) const;
  static Poly from_coeffs(GenId g, const std::vector<Poly>& coeffs);

  // Replace generator g by s_g for each g in the map (simultaneously).
  Poly substitute(const std::function<std::optional<Poly>(GenId)>& map) const;

  // Sign flip so that the leading term under the stable key order is positive.
  Poly stable_normal() const;
  int stable_sign() const;

  std::size_t hash() const;

 private:
  std::vector<Term> t_;
};

// Exact division; nullopt when b does not divide a. b must be sqrt-free.
std::optional<Poly> divide(const Poly& a, const Poly& b);

// Greatest common divisor, normalized by stable_normal(). Inputs sqrt-free.
Poly gcd(const Poly& a, const Poly& b);

// gcd(a, b) where a may contain sqrt generators and b is sqrt-free.
Poly gcd_sqrt_aware(const Poly& a, const Poly& b);

}  // namespace bgg::sym
