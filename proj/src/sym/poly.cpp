#include "bgg/sym/poly.hpp"

#include <algorithm>
#include <cassert>

#include "bgg/sym/errors.hpp"

namespace bgg::sym {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(GenId g, std::uint32_t e) {
  Monomial m;
  if (e > 0) m.f_.emplace_back(g, e);
  return m;
}

std::uint32_t Monomial::degree(GenId g) const {
  for (const auto& [id, e] : f_) {
    if (id == g) return e;
    if (id > g) break;
  }
  return 0;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& fe : f_) d += fe.second;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  std::size_t j = 0;
  for (const auto& [g, e] : f_) {
    while (j < other.f_.size() && other.f_[j].first < g) ++j;
    if (j == other.f_.size() || other.f_[j].first != g || other.f_[j].second < e)
      return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial r;
  std::size_t j = 0;
  for (const auto& [g, e] : f_) {
    std::uint32_t d = 0;
    if (j < other.f_.size() && other.f_[j].first == g) d = other.f_[j++].second;
    assert(d <= e);
    if (e > d) r.f_.emplace_back(g, e - d);
  }
  assert(j == other.f_.size());
  return r;
}

Monomial Monomial::without(GenId g) const {
  Monomial r;
  for (const auto& fe : f_)
    if (fe.first != g) r.f_.push_back(fe);
  return r;
}

Monomial Monomial::with(GenId g, std::uint32_t e) const {
  Monomial r;
  bool placed = false;
  for (const auto& fe : f_) {
    if (!placed && fe.first >= g) {
      placed = true;
      std::uint32_t total = e + (fe.first == g ? fe.second : 0);
      if (total > 0) r.f_.emplace_back(g, total);
      if (fe.first == g) continue;
    }
    r.f_.push_back(fe);
  }
  if (!placed && e > 0) r.f_.emplace_back(g, e);
  return r;
}

bool Monomial::has_sqrt() const {
  return !f_.empty() && is_sqrt_gen(f_.back().first);
}

int compare(const Monomial& a, const Monomial& b) {
  std::size_t i = 0, j = 0;
  while (i < a.f_.size() && j < b.f_.size()) {
    if (a.f_[i].first != b.f_[j].first) return a.f_[i].first < b.f_[j].first ? 1 : -1;
    if (a.f_[i].second != b.f_[j].second) return a.f_[i].second > b.f_[j].second ? 1 : -1;
    ++i;
    ++j;
  }
  if (i < a.f_.size()) return 1;
  if (j < b.f_.size()) return -1;
  return 0;
}

Monomial multiply(const Monomial& a, const Monomial& b, unsigned long& factor) {
  Monomial r;
  r.f_.reserve(a.f_.size() + b.f_.size());
  std::size_t i = 0, j = 0;
  auto push = [&](GenId g, std::uint32_t e) {
    if (is_sqrt_gen(g) && e >= 2) {
      factor *= info(g).prime;
      e -= 2;
    }
    if (e > 0) r.f_.emplace_back(g, e);
  };
  while (i < a.f_.size() || j < b.f_.size()) {
    if (j == b.f_.size() || (i < a.f_.size() && a.f_[i].first < b.f_[j].first)) {
      push(a.f_[i].first, a.f_[i].second);
      ++i;
    } else if (i == a.f_.size() || b.f_[j].first < a.f_[i].first) {
      push(b.f_[j].first, b.f_[j].second);
      ++j;
    } else {
      push(a.f_[i].first, a.f_[i].second + b.f_[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const mpz_class& c) {
  if (c != 0) t_.push_back(Term{Monomial(), c});
}

Poly Poly::gen(GenId g, std::uint32_t e) {
  Poly p;
  if (is_sqrt_gen(g) && e >= 2) {
    mpz_class c;
    mpz_ui_pow_ui(c.get_mpz_t(), info(g).prime, e / 2);
    p.t_.push_back(Term{Monomial::of(g, e % 2), c});
  } else {
    p.t_.push_back(Term{Monomial::of(g, e), mpz_class(1)});
  }
  return p;
}

Poly Poly::term(const Monomial& m, const mpz_class& c) {
  Poly p;
  if (c != 0) p.t_.push_back(Term{m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare(a.m, b.m) > 0; });
  Poly p;
  p.t_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().m == t.m) {
      p.t_.back().c += t.c;
    } else {
      if (!p.t_.empty() && p.t_.back().c == 0) p.t_.pop_back();
      p.t_.push_back(std::move(t));
    }
  }
  if (!p.t_.empty() && p.t_.back().c == 0) p.t_.pop_back();
  return p;
}

Poly Poly::from_sorted(std::vector<Term> terms) {
  Poly p;
  p.t_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_[0].m.is_one());
}

bool Poly::is_one() const {
  return t_.size() == 1 && t_[0].m.is_one() && t_[0].c == 1;
}

mpz_class Poly::constant_value() const {
  assert(is_constant());
  return t_.empty() ? mpz_class(0) : t_[0].c;
}

std::vector<GenId> Poly::gens() const {
  std::vector<GenId> out;
  for (const auto& t : t_)
    for (const auto& fe : t.m.factors()) out.push_back(fe.first);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Poly::has_gen(GenId g) const {
  for (const auto& t : t_)
    if (t.m.degree(g) > 0) return true;
  return false;
}

bool Poly::has_sqrt() const {
  for (const auto& t : t_)
    if (t.m.has_sqrt()) return true;
  return false;
}

std::uint32_t Poly::degree(GenId g) const {
  std::uint32_t d = 0;
  for (const auto& t : t_) d = std::max(d, t.m.degree(g));
  return d;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : t_) d = std::max(d, t.m.total_degree());
  return d;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& t : t_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitive() const {
  if (t_.empty()) return *this;
  mpz_class g = content();
  if (g == 1) return *this;
  return divexact(g);
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

namespace {

Poly merge(const Poly& a, const Poly& b, bool subtract) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    int c = compare(x[i].m, y[j].m);
    if (c > 0) {
      out.push_back(x[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{y[j].m, -y[j].c} : y[j]);
      ++j;
    } else {
      mpz_class s = subtract ? mpz_class(x[i].c - y[j].c) : mpz_class(x[i].c + y[j].c);
      if (s != 0) out.push_back(Term{x[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < x.size(); ++i) out.push_back(x[i]);
  for (; j < y.size(); ++j) out.push_back(subtract ? Term{y[j].m, -y[j].c} : y[j]);
  return Poly::from_sorted(std::move(out));
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return merge(a, b, false);
}

Poly operator-(const Poly& a, const Poly& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  return merge(a, b, true);
}

Poly Poly::mul_term(const Monomial& m, const mpz_class& c) const {
  if (c == 0) return Poly();
  std::vector<Term> out;
  out.reserve(t_.size());
  bool reduced = false;
  for (const auto& t : t_) {
    unsigned long f = 1;
    Monomial mm = multiply(t.m, m, f);
    if (f != 1) reduced = true;
    out.push_back(Term{std::move(mm), t.c * c * f});
  }
  if (reduced) return from_terms(std::move(out));
  Poly r;
  r.t_ = std::move(out);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.size() == 1) return b.mul_term(a.t_[0].m, a.t_[0].c);
  if (b.size() == 1) return a.mul_term(b.t_[0].m, b.t_[0].c);
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a.t_) {
    for (const auto& t : b.t_) {
      unsigned long f = 1;
      Monomial m = multiply(s.m, t.m, f);
      mpz_class c = s.c * t.c;
      if (f != 1) c *= f;
      out.push_back(Term{std::move(m), std::move(c)});
    }
  }
  return Poly::from_terms(std::move(out));
}

Poly operator*(const Poly& a, const mpz_class& c) {
  if (c == 0) return Poly();
  Poly r = a;
  for (auto& t : r.t_) t.c *= c;
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly result(1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Poly Poly::divexact(const mpz_class& c) const {
  Poly r = *this;
  for (auto& t : r.t_) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (a.t_[i].c != b.t_[i].c || !(a.t_[i].m == b.t_[i].m)) return false;
  return true;
}

Poly Poly::derivative(GenId g) const {
  std::vector<Term> out;
  for (const auto& t : t_) {
    std::uint32_t e = t.m.degree(g);
    if (e == 0) continue;
    out.push_back(Term{t.m.without(g).with(g, e - 1), t.c * e});
  }
  return from_sorted(std::move(out));
}

std::vector<Poly> Poly::coeffs_in(GenId g) const {
  std::vector<std::vector<Term>> buckets(degree(g) + 1);
  for (const auto& t : t_) {
    std::uint32_t e = t.m.degree(g);
    buckets[e].push_back(Term{t.m.without(g), t.c});
  }
  std::vector<Poly> out(buckets.size());
  for (std::size_t k = 0; k < buckets.size(); ++k) out[k].t_ = std::move(buckets[k]);
  return out;
}

Poly Poly::from_coeffs(GenId g, const std::vector<Poly>& coeffs) {
  std::vector<Term> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& t : coeffs[k].t_)
      out.push_back(Term{t.m.with(g, static_cast<std::uint32_t>(k)), t.c});
  return from_terms(std::move(out));
}

Poly Poly::substitute(const std::function<std::optional<Poly>(GenId)>& map) const {
  std::vector<GenId> gs = gens();
  std::vector<std::pair<GenId, Poly>> images;
  for (GenId g : gs)
    if (auto img = map(g)) images.emplace_back(g, std::move(*img));
  if (images.empty()) return *this;
  Poly result;
  for (const auto& t : t_) {
    Monomial rest;
    Poly factor(t.c);
    for (const auto& [g, e] : t.m.factors()) {
      auto it = std::find_if(images.begin(), images.end(),
                             [g = g](const auto& im) { return im.first == g; });
      if (it != images.end()) {
        factor = factor * it->second.pow(e);
      } else {
        rest.f_.emplace_back(g, e);
      }
    }
    result += factor.mul_term(rest, 1);
  }
  return result;
}

int Poly::stable_sign() const {
  if (t_.empty()) return 0;
  if (t_.size() == 1) return sgn(t_[0].c);
  std::vector<GenId> gs = gens();
  std::sort(gs.begin(), gs.end(), key_less);
  auto rank = [&](GenId g) {
    return static_cast<std::uint32_t>(std::find(gs.begin(), gs.end(), g) - gs.begin());
  };
  using Key = boost::container::small_vector<std::pair<std::uint32_t, std::uint32_t>, 6>;
  auto key_of = [&](const Monomial& m) {
    Key k;
    for (const auto& [g, e] : m.factors()) k.emplace_back(rank(g), e);
    std::sort(k.begin(), k.end());
    return k;
  };
  auto greater = [](const Key& a, const Key& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size()) {
      if (a[i].first != b[i].first) return a[i].first < b[i].first;
      if (a[i].second != b[i].second) return a[i].second > b[i].second;
      ++i;
    }
    return i < a.size() && i >= b.size();
  };
  std::size_t best = 0;
  Key best_key = key_of(t_[0].m);
  for (std::size_t i = 1; i < t_.size(); ++i) {
    Key k = key_of(t_[i].m);
    if (greater(k, best_key)) {
      best = i;
      best_key = std::move(k);
    }
  }
  return sgn(t_[best].c);
}

Poly Poly::stable_normal() const { return stable_sign() < 0 ? -*this : *this; }

std::size_t Poly::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  auto mix = [&](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
  for (const auto& t : t_) {
    for (const auto& [g, e] : t.m.factors()) {
      mix(g);
      mix(e);
    }
    mix(mpz_get_ui(t.c.get_mpz_t()));
    mix(static_cast<std::size_t>(sgn(t.c)));
  }
  return h;
}

// ---------------------------------------------------------------- division

std::optional<Poly> divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return Poly();
  if (b.is_constant()) {
    mpz_class c = b.constant_value();
    for (const auto& t : a.terms())
      if (!mpz_divisible_p(t.c.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
    return a.divexact(c);
  }
  if (b.is_monomial()) {
    const Term& bt = b.leading();
    std::vector<Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!bt.m.divides(t.m) || !mpz_divisible_p(t.c.get_mpz_t(), bt.c.get_mpz_t()))
        return std::nullopt;
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), t.c.get_mpz_t(), bt.c.get_mpz_t());
      out.push_back(Term{t.m.quotient(bt.m), std::move(q)});
    }
    return Poly::from_terms(std::move(out));
  }
  for (GenId g : b.gens())
    if (a.degree(g) < b.degree(g)) return std::nullopt;
  const Term& lb = b.leading();
  Poly r = a;
  std::vector<Term> q;
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (!lb.m.divides(lr.m) || !mpz_divisible_p(lr.c.get_mpz_t(), lb.c.get_mpz_t()))
      return std::nullopt;
    Term t{lr.m.quotient(lb.m), mpz_class()};
    mpz_divexact(t.c.get_mpz_t(), lr.c.get_mpz_t(), lb.c.get_mpz_t());
    r = r - b.mul_term(t.m, t.c);
    q.push_back(std::move(t));
  }
  return Poly::from_terms(std::move(q));
}

}  // namespace bgg::sym
