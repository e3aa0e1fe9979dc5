// Multivariate polynomial gcd over Z: recursive content removal plus the
// subresultant remainder sequence, with a modular image test that proves
// coprimality (or degree-0 in a variable) cheaply in the common case.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <random>

#include "bgg/sym/poly.hpp"

namespace bgg::sym {

namespace {

using UPoly = std::vector<Poly>;

// ------------------------------------------------------------ mod p images

constexpr std::uint64_t kP = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  __uint128_t r = static_cast<__uint128_t>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(r & kP);
  std::uint64_t hi = static_cast<std::uint64_t>(r >> 61);
  std::uint64_t s = lo + hi;
  if (s >= kP) s -= kP;
  return s;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kP ? s - kP : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kP - b; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kP - 2); }

std::uint64_t reduce(const mpz_class& c) {
  return mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(kP));
}

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Univariate image in v with every other generator replaced by its value.
ModPoly image(const Poly& a, GenId v, const std::vector<std::pair<GenId, std::uint64_t>>& vals) {
  ModPoly out(a.degree(v) + 1, 0);
  for (const auto& t : a.terms()) {
    std::uint64_t c = reduce(t.c);
    std::uint32_t k = 0;
    for (const auto& [g, e] : t.m.factors()) {
      if (g == v) {
        k = e;
        continue;
      }
      auto it = std::lower_bound(vals.begin(), vals.end(), g,
                                 [](const auto& p, GenId id) { return p.first < id; });
      c = mulmod(c, powmod(it->second, e));
    }
    out[k] = addmod(out[k], c);
  }
  trim(out);
  return out;
}

std::size_t modgcd_degree(ModPoly a, ModPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    std::uint64_t inv = invmod(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      std::uint64_t f = mulmod(a.back(), inv);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[i + shift] = submod(a[i + shift], mulmod(f, b[i]));
      trim(a);
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Upper bound on deg_v gcd(a, b), exact with high probability. Returns the
// true degree of a or b in v when the evaluation point is unlucky.
std::uint32_t degree_bound(const Poly& a, const Poly& b, GenId v, std::mt19937_64& rng) {
  std::vector<GenId> gs = a.gens();
  for (GenId g : b.gens()) gs.push_back(g);
  std::sort(gs.begin(), gs.end());
  gs.erase(std::unique(gs.begin(), gs.end()), gs.end());
  std::vector<std::pair<GenId, std::uint64_t>> vals;
  for (GenId g : gs)
    if (g != v) vals.emplace_back(g, rng() % (kP - 2) + 2);
  ModPoly ia = image(a, v, vals);
  ModPoly ib = image(b, v, vals);
  std::uint32_t da = a.degree(v), db = b.degree(v);
  bool lc_ok = (ia.size() == da + 1) || (ib.size() == db + 1);
  if (!lc_ok || ia.empty() || ib.empty()) return std::min(da, db);
  return static_cast<std::uint32_t>(modgcd_degree(std::move(ia), std::move(ib)));
}

// ------------------------------------------------------- univariate helpers

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly prem(UPoly r, const UPoly& b) {
  const int db = udeg(b);
  const Poly& lcb = b.back();
  int e = udeg(r) - db + 1;
  while (!r.empty() && udeg(r) >= db) {
    Poly lcr = r.back();
    int k = udeg(r) - db;
    for (auto& c : r) c = c * lcb;
    for (int i = 0; i <= db; ++i) r[i + k] = r[i + k] - b[i] * lcr;
    r.pop_back();
    trim(r);
    --e;
  }
  if (e > 0) {
    Poly f = lcb.pow(static_cast<unsigned>(e));
    for (auto& c : r) c = c * f;
  }
  return r;
}

UPoly udivexact(const UPoly& a, const Poly& d) {
  if (d.is_one()) return a;
  UPoly out;
  out.reserve(a.size());
  for (const auto& c : a) {
    auto q = divide(c, d);
    assert(q);
    out.push_back(std::move(*q));
  }
  return out;
}

Poly gcd_impl(const Poly& a, const Poly& b);

Poly gcd_list(const std::vector<Poly>& ps, Poly start = Poly()) {
  Poly g = std::move(start);
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    g = gcd_impl(g, p);
    if (g.is_constant() && g.constant_value() == 1) break;
  }
  return g;
}

Poly content_in(const UPoly& p) { return gcd_list(p); }

UPoly subresultant(UPoly a, UPoly b) {
  if (udeg(a) < udeg(b)) std::swap(a, b);
  Poly g(1), h(1);
  while (true) {
    int delta = udeg(a) - udeg(b);
    UPoly r = prem(a, b);
    if (r.empty()) return b;
    if (udeg(r) == 0) return UPoly{Poly(1)};
    a = std::move(b);
    Poly divisor = g * h.pow(static_cast<unsigned>(delta));
    b = udivexact(r, divisor);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      auto q = divide(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
      assert(q);
      h = std::move(*q);
    }
  }
}

Poly monomial_gcd(const Term& t, const Poly& b) {
  // gcd of a single term with b: integer gcd of contents times the common
  // monomial factor.
  mpz_class c = b.content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
  Monomial m = t.m;
  for (const auto& bt : b.terms()) {
    Monomial next;
    for (const auto& [g, e] : m.factors()) {
      std::uint32_t d = std::min(e, bt.m.degree(g));
      if (d > 0) next = next.with(g, d);
    }
    m = std::move(next);
    if (m.is_one()) break;
  }
  return Poly::term(m, c);
}

Poly gcd_impl(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.stable_normal();
  if (b.is_zero()) return a.stable_normal();
  if (a == b) return a.stable_normal();
  if (a.is_constant() || b.is_constant()) {
    mpz_class c = a.content();
    mpz_class d = b.content();
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    return Poly(c);
  }
  if (a.is_monomial()) return monomial_gcd(a.leading(), b);
  if (b.is_monomial()) return monomial_gcd(b.leading(), a);

  std::vector<GenId> ga = a.gens(), gb = b.gens();
  std::vector<GenId> common;
  std::set_intersection(ga.begin(), ga.end(), gb.begin(), gb.end(), std::back_inserter(common));

  mpz_class cz = a.content();
  {
    mpz_class d = b.content();
    mpz_gcd(cz.get_mpz_t(), cz.get_mpz_t(), d.get_mpz_t());
  }
  if (common.empty()) return Poly(cz);

  // A variable present in only one argument cannot occur in the gcd; reduce
  // that argument to its content with respect to the variable.
  for (GenId v : ga)
    if (!std::binary_search(gb.begin(), gb.end(), v))
      return gcd_list(a.coeffs_in(v), b);
  for (GenId v : gb)
    if (!std::binary_search(ga.begin(), ga.end(), v))
      return gcd_list(b.coeffs_in(v), a);

  std::mt19937_64 rng(a.hash() ^ (b.hash() << 1));
  std::vector<std::uint32_t> bound(common.size());
  bool all_zero = true;
  for (std::size_t i = 0; i < common.size(); ++i) {
    bound[i] = degree_bound(a, b, common[i], rng);
    if (bound[i] != 0) all_zero = false;
  }
  if (all_zero) return Poly(cz);

  // Trial division when the bounds allow one argument to be the gcd.
  auto fits = [&](const Poly& p) {
    for (std::size_t i = 0; i < common.size(); ++i)
      if (bound[i] != p.degree(common[i])) return false;
    return true;
  };
  if (fits(b)) {
    if (divide(a, b)) return b.stable_normal();
  }
  if (fits(a)) {
    if (divide(b, a)) return a.stable_normal();
  }

  // A variable with bound 0 is absent from the gcd.
  for (std::size_t i = 0; i < common.size(); ++i) {
    if (bound[i] == 0) {
      Poly g = gcd_list(a.coeffs_in(common[i]));
      return gcd_list(b.coeffs_in(common[i]), g);
    }
  }

  // Main variable: smallest degree.
  std::size_t best = 0;
  std::uint32_t best_deg = ~0u;
  for (std::size_t i = 0; i < common.size(); ++i) {
    std::uint32_t d = std::min(a.degree(common[i]), b.degree(common[i]));
    if (d < best_deg) {
      best_deg = d;
      best = i;
    }
  }
  GenId v = common[best];
  UPoly ua = a.coeffs_in(v), ub = b.coeffs_in(v);
  Poly ca = content_in(ua), cb = content_in(ub);
  Poly c = gcd_impl(ca, cb);
  UPoly pa = udivexact(ua, ca), pb = udivexact(ub, cb);
  UPoly s = subresultant(std::move(pa), std::move(pb));
  Poly cs = content_in(s);
  Poly g = Poly::from_coeffs(v, udivexact(s, cs));
  return (g * c).stable_normal();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  assert(!a.has_sqrt() && !b.has_sqrt());
  return gcd_impl(a, b);
}

Poly gcd_sqrt_aware(const Poly& a, const Poly& b) {
  if (!a.has_sqrt()) return gcd_impl(a, b);
  std::vector<Poly> parts{a};
  for (GenId g : a.gens()) {
    if (!is_sqrt_gen(g)) continue;
    std::vector<Poly> next;
    for (const auto& p : parts)
      for (auto& c : p.coeffs_in(g))
        if (!c.is_zero()) next.push_back(std::move(c));
    parts = std::move(next);
  }
  return gcd_list(parts, b).stable_normal();
}

}  // namespace bgg::sym
