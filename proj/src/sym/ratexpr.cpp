#include "bgg/sym/ratexpr.hpp"

#include <algorithm>
#include <cassert>

#include "bgg/sym/errors.hpp"
#include "bgg/sym/expr.hpp"

namespace bgg::sym {

namespace {

Poly conjugate(const Poly& p, GenId s) {
  return p.substitute([s](GenId g) -> std::optional<Poly> {
    if (g == s) return -Poly::gen(s);
    return std::nullopt;
  });
}

Poly exact(const Poly& a, const Poly& b) {
  if (b.is_one()) return a;
  auto q = divide(a, b);
  if (!q) throw Error("internal error: inexact polynomial division");
  return std::move(*q);
}

}  // namespace

RatExpr::RatExpr(const mpq_class& c) {
  mpq_class q(c);
  q.canonicalize();
  num_ = Poly(q.get_num());
  den_ = Poly(q.get_den());
}

RatExpr RatExpr::fraction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DivisionByZero();
  RatExpr r;
  if (num.is_zero()) return r;
  Poly n = num, d = den;
  while (d.has_sqrt()) {
    GenId s = 0;
    for (GenId g : d.gens())
      if (is_sqrt_gen(g)) s = g;
    Poly c = conjugate(d, s);
    n = n * c;
    d = d * c;
  }
  if (d.is_constant() && n.is_constant()) {
    mpq_class q(n.constant_value(), d.constant_value());
    q.canonicalize();
    return RatExpr(q);
  }
  Poly g = gcd_sqrt_aware(n, d);
  if (!g.is_one()) {
    n = exact(n, g);
    d = exact(d, g);
  }
  if (d.stable_sign() < 0) {
    n = -n;
    d = -d;
  }
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  return r;
}

RatExpr RatExpr::sqrt_of(const mpq_class& q) {
  if (q < 0) throw DomainError("sqrt of a negative constant");
  if (q == 0) return RatExpr(0);
  mpz_class n = q.get_num() * q.get_den();
  mpz_class outside = 1;
  std::vector<unsigned long> primes;
  for (unsigned long p = 2; p <= 1000000 && mpz_class(p) * p <= n; ++p) {
    unsigned k = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++k;
    }
    for (unsigned i = 0; i < k / 2; ++i) outside *= p;
    if (k % 2) primes.push_back(p);
  }
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      mpz_class root;
      mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
      outside *= root;
    } else if (n.fits_ulong_p() && mpz_probab_prime_p(n.get_mpz_t(), 30)) {
      primes.push_back(n.get_ui());
    } else {
      throw DomainError("sqrt argument too large to factor");
    }
  }
  Poly p(outside);
  for (unsigned long pr : primes) p = p * Poly::gen(sqrt_prime(pr));
  return fraction(p, Poly(mpz_class(q.get_den())));
}

std::optional<mpq_class> RatExpr::as_rational() const {
  if (!is_constant()) return std::nullopt;
  mpq_class q(num_.constant_value(), den_.constant_value());
  q.canonicalize();
  return q;
}

std::vector<GenId> RatExpr::gens() const {
  std::vector<GenId> a = num_.gens(), b = den_.gens(), out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

RatExpr RatExpr::operator-() const {
  RatExpr r = *this;
  r.num_ = -r.num_;
  return r;
}

RatExpr operator+(const RatExpr& a, const RatExpr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return RatExpr(a.num_ + b.num_);
    return RatExpr::fraction(a.num_ + b.num_, a.den_);
  }
  RatExpr r;
  if (a.den_.is_one() || b.den_.is_one()) {
    const RatExpr& p = a.den_.is_one() ? a : b;
    const RatExpr& f = a.den_.is_one() ? b : a;
    r.num_ = p.num_ * f.den_ + f.num_;
    r.den_ = f.den_;
    if (r.num_.is_zero()) return RatExpr();
    return r;
  }
  Poly g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
    if (r.num_.is_zero()) return RatExpr();
    return r;
  }
  Poly ad = exact(a.den_, g), bd = exact(b.den_, g);
  Poly t = a.num_ * bd + b.num_ * ad;
  if (t.is_zero()) return RatExpr();
  Poly g2 = gcd_sqrt_aware(t, g);
  r.num_ = exact(t, g2);
  r.den_ = ad * exact(b.den_, g2);
  if (r.den_.stable_sign() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatExpr operator-(const RatExpr& a, const RatExpr& b) { return a + (-b); }

RatExpr operator*(const RatExpr& a, const RatExpr& b) {
  if (a.is_zero() || b.is_zero()) return RatExpr();
  if (a.num_.has_sqrt() && b.num_.has_sqrt())
    return RatExpr::fraction(a.num_ * b.num_, a.den_ * b.den_);
  RatExpr r;
  if (a.den_.is_one() && b.den_.is_one()) {
    r.num_ = a.num_ * b.num_;
    r.den_ = Poly(1);
    return r;
  }
  Poly g1 = b.den_.is_one() ? Poly(1) : gcd_sqrt_aware(a.num_, b.den_);
  Poly g2 = a.den_.is_one() ? Poly(1) : gcd_sqrt_aware(b.num_, a.den_);
  r.num_ = exact(a.num_, g1) * exact(b.num_, g2);
  r.den_ = exact(a.den_, g2) * exact(b.den_, g1);
  if (r.den_.stable_sign() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatExpr RatExpr::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (num_.has_sqrt()) return fraction(den_, num_);
  RatExpr r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.stable_sign() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatExpr operator/(const RatExpr& a, const RatExpr& b) { return a * b.inverse(); }

RatExpr RatExpr::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  if (n == 0) return RatExpr(1);
  if (num_.has_sqrt()) {
    RatExpr result(1), base = *this;
    unsigned long k = static_cast<unsigned long>(n);
    while (k) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }
  RatExpr r;
  r.num_ = num_.pow(static_cast<unsigned>(n));
  r.den_ = den_.pow(static_cast<unsigned>(n));
  return r;
}

// ----------------------------------------------------------------- atoms

RatExpr apply(Func f, const RatExpr& arg) {
  if (arg.is_zero()) {
    switch (f) {
      case Func::Exp:
      case Func::Cos:
      case Func::Cosh:
        return RatExpr(1);
      case Func::Sin:
      case Func::Tan:
      case Func::Sinh:
        return RatExpr(0);
      case Func::Log:
        throw DomainError("log(0)");
    }
  }
  if (f == Func::Log) {
    if (auto q = arg.as_rational()) {
      if (*q <= 0) throw DomainError("log of a nonpositive constant");
      if (*q == 1) return RatExpr(0);
    }
  }
  return RatExpr::gen(atom(f, arg));
}

RatExpr apply_function(std::string_view name, unsigned order, const RatExpr& arg) {
  return RatExpr::gen(function(name, order, arg));
}

RatExpr field_symbol(std::string_view name, std::vector<GenId> partials) {
  return RatExpr::gen(field(name, std::move(partials)));
}

// ------------------------------------------------------------ derivative

namespace {

RatExpr diff_poly(const Poly& p, GenId v) {
  Poly poly_part;
  RatExpr rest;
  for (GenId g : p.gens()) {
    if (!depends_on(g, v)) continue;
    const RatExpr& dg = derivative(g, v);
    Poly dp = p.derivative(g);
    if (dg.is_polynomial()) {
      poly_part += dp * dg.num();
    } else {
      rest += RatExpr(dp) * dg;
    }
  }
  return rest + RatExpr(poly_part);
}

bool depends(const Poly& p, GenId v) {
  for (GenId g : p.gens())
    if (depends_on(g, v)) return true;
  return false;
}

}  // namespace

RatExpr diff(const RatExpr& e, GenId v) {
  if (e.is_constant()) return RatExpr(0);
  RatExpr dn = diff_poly(e.num(), v);
  if (!depends(e.den(), v)) {
    if (e.is_polynomial()) return dn;
    return dn * RatExpr::fraction(Poly(1), e.den());
  }
  RatExpr dd = diff_poly(e.den(), v);
  if (dn.is_polynomial() && dd.is_polynomial())
    return RatExpr::fraction(dn.num() * e.den() - e.num() * dd.num(), e.den() * e.den());
  RatExpr d(e.den());
  return (dn * d - RatExpr(e.num()) * dd) / (d * d);
}

RatExpr diff(const RatExpr& e, GenId v, unsigned times) {
  RatExpr r = e;
  for (unsigned i = 0; i < times; ++i) r = diff(r, v);
  return r;
}

// ---------------------------------------------------------- substitution

namespace {

RatExpr eval_poly(const Poly& p, const std::vector<std::pair<GenId, RatExpr>>& images) {
  bool all_poly = std::all_of(images.begin(), images.end(),
                              [](const auto& im) { return im.second.is_polynomial(); });
  if (all_poly) {
    return RatExpr(p.substitute([&](GenId g) -> std::optional<Poly> {
      for (const auto& im : images)
        if (im.first == g) return im.second.num();
      return std::nullopt;
    }));
  }
  RatExpr acc;
  for (const auto& t : p.terms()) {
    RatExpr term(t.c);
    Monomial rest;
    for (const auto& [g, e] : t.m.factors()) {
      auto it = std::find_if(images.begin(), images.end(),
                             [g = g](const auto& im) { return im.first == g; });
      if (it != images.end()) {
        term *= it->second.pow(e);
      } else {
        rest = rest.with(g, e);
      }
    }
    acc += term * RatExpr(Poly::term(rest, 1));
  }
  return acc;
}

}  // namespace

RatExpr subst(const RatExpr& e, const std::vector<std::pair<GenId, RatExpr>>& bindings) {
  std::vector<std::pair<GenId, RatExpr>> images;
  for (GenId g : e.gens()) {
    auto b = std::find_if(bindings.begin(), bindings.end(),
                          [g](const auto& kv) { return kv.first == g; });
    if (b != bindings.end()) {
      images.emplace_back(g, b->second);
      continue;
    }
    const GeneratorInfo& gi = info(g);
    switch (gi.kind) {
      case GenKind::Variable:
      case GenKind::SqrtPrime:
        break;
      case GenKind::Atom: {
        RatExpr a = subst(*gi.arg, bindings);
        if (a != *gi.arg) images.emplace_back(g, apply(gi.func, a));
        break;
      }
      case GenKind::Function: {
        RatExpr a = subst(*gi.arg, bindings);
        if (a != *gi.arg) images.emplace_back(g, apply_function(gi.name, gi.order, a));
        break;
      }
      case GenKind::Field:
        for (const auto& [v, img] : bindings)
          if (info(v).kind == GenKind::Variable && img != RatExpr::gen(v))
            throw Error("cannot substitute chart variables inside abstract field '" +
                        gi.name + "'");
        break;
    }
  }
  if (images.empty()) return e;
  return eval_poly(e.num(), images) / eval_poly(e.den(), images);
}

// -------------------------------------------------------------- printing

std::string to_string(const RatExpr& e) { return print(from_ratexpr(e)); }

std::string to_string(const Poly& p) { return print(from_ratexpr(RatExpr(p))); }

}  // namespace bgg::sym
