#include "bgg/sym/expr.hpp"

#include <algorithm>
#include <cassert>

#include "bgg/sym/errors.hpp"

namespace bgg::sym {

struct Expr::Node {
  Kind kind = Kind::Number;
  mpq_class q;
  mpz_class n;
  std::string name;
  std::vector<Expr> kids;
  long exp = 0;
  Func f = Func::Exp;
  unsigned order = 0;
  std::vector<std::string> partials;
};

Expr Expr::number(const mpq_class& q) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Number;
  n->q = q;
  return Expr(std::move(n));
}

Expr Expr::variable(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->name = std::move(name);
  return Expr(std::move(n));
}

Expr Expr::sqrt(const mpz_class& radicand) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sqrt;
  n->n = radicand;
  return Expr(std::move(n));
}

Expr Expr::binary(Kind k, Expr a, Expr b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->kids = {std::move(a), std::move(b)};
  return Expr(std::move(n));
}

Expr Expr::power(Expr base, long exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->kids = {std::move(base)};
  n->exp = exponent;
  return Expr(std::move(n));
}

Expr Expr::neg(Expr a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Neg;
  n->kids = {std::move(a)};
  return Expr(std::move(n));
}

Expr Expr::func(Func f, Expr arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Func;
  n->f = f;
  n->kids = {std::move(arg)};
  return Expr(std::move(n));
}

Expr Expr::function(std::string name, unsigned order, Expr arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Function;
  n->name = std::move(name);
  n->order = order;
  n->kids = {std::move(arg)};
  return Expr(std::move(n));
}

Expr Expr::field(std::string name, std::vector<std::string> partials) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Field;
  n->name = std::move(name);
  n->partials = std::move(partials);
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return n_->kind; }
const mpq_class& Expr::value() const { return n_->q; }
const mpz_class& Expr::radicand() const { return n_->n; }
const std::string& Expr::name() const { return n_->name; }
const Expr& Expr::lhs() const { return n_->kids.at(0); }
const Expr& Expr::rhs() const { return n_->kids.at(1); }
long Expr::exponent() const { return n_->exp; }
Func Expr::func_kind() const { return n_->f; }
unsigned Expr::order() const { return n_->order; }
const std::vector<std::string>& Expr::partials() const { return n_->partials; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.n_ == b.n_) return true;
  const auto& x = *a.n_;
  const auto& y = *b.n_;
  if (x.kind != y.kind || x.q != y.q || x.n != y.n || x.name != y.name || x.exp != y.exp ||
      x.f != y.f || x.order != y.order || x.partials != y.partials ||
      x.kids.size() != y.kids.size())
    return false;
  for (std::size_t i = 0; i < x.kids.size(); ++i)
    if (!(x.kids[i] == y.kids[i])) return false;
  return true;
}

// ---------------------------------------------------------------- printer

namespace {

int precedence(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    case Expr::Kind::Number:
      if (e.value() < 0) return 1;
      return e.value().get_den() == 1 ? 5 : 2;
    default:
      return 5;
  }
}

std::string print_impl(const Expr& e);

std::string wrap(const Expr& e, int min_prec) {
  std::string s = print_impl(e);
  if (precedence(e) < min_prec) return "(" + s + ")";
  return s;
}

std::string print_impl(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::Number:
      return e.value().get_str();
    case K::Variable:
      return e.name();
    case K::Sqrt:
      return "sqrt(" + e.radicand().get_str() + ")";
    case K::Add:
      if (e.rhs().kind() == K::Neg) return wrap(e.lhs(), 1) + " - " + wrap(e.rhs().lhs(), 2);
      return wrap(e.lhs(), 1) + " + " + wrap(e.rhs(), 2);
    case K::Sub:
      return wrap(e.lhs(), 1) + " - " + wrap(e.rhs(), 2);
    case K::Mul: {
      std::string r = e.rhs().kind() == K::Neg ? "(" + print_impl(e.rhs()) + ")" : wrap(e.rhs(), 4);
      return wrap(e.lhs(), 2) + "*" + r;
    }
    case K::Div:
      return wrap(e.lhs(), 2) + "/" + wrap(e.rhs(), 4);
    case K::Neg:
      return "-" + wrap(e.lhs(), 2);
    case K::Pow: {
      std::string ex = std::to_string(e.exponent());
      if (e.exponent() < 0) ex = "(" + ex + ")";
      return wrap(e.lhs(), 5) + "^" + ex;
    }
    case K::Func:
      return std::string(func_name(e.func_kind())) + "(" + print_impl(e.lhs()) + ")";
    case K::Function:
      return e.name() + std::string(e.order(), '\'') + "(" + print_impl(e.lhs()) + ")";
    case K::Field: {
      std::string s = e.name();
      for (const auto& v : e.partials()) s += "_" + v;
      return s;
    }
  }
  return "?";
}

}  // namespace

std::string print(const Expr& e) { return print_impl(e); }

// ------------------------------------------------------------- conversion

RatExpr to_ratexpr(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::Number:
      return RatExpr(e.value());
    case K::Variable:
      return RatExpr::var(e.name());
    case K::Sqrt:
      return RatExpr::sqrt_of(mpq_class(e.radicand()));
    case K::Add:
      return to_ratexpr(e.lhs()) + to_ratexpr(e.rhs());
    case K::Sub:
      return to_ratexpr(e.lhs()) - to_ratexpr(e.rhs());
    case K::Mul:
      return to_ratexpr(e.lhs()) * to_ratexpr(e.rhs());
    case K::Div:
      return to_ratexpr(e.lhs()) / to_ratexpr(e.rhs());
    case K::Pow:
      return to_ratexpr(e.lhs()).pow(e.exponent());
    case K::Neg:
      return -to_ratexpr(e.lhs());
    case K::Func:
      return apply(e.func_kind(), to_ratexpr(e.lhs()));
    case K::Function:
      return apply_function(e.name(), e.order(), to_ratexpr(e.lhs()));
    case K::Field: {
      std::vector<GenId> ps;
      for (const auto& v : e.partials()) ps.push_back(variable(v));
      return field_symbol(e.name(), std::move(ps));
    }
  }
  return RatExpr();
}

namespace {

Expr generator_expr(GenId g) {
  const GeneratorInfo& gi = info(g);
  switch (gi.kind) {
    case GenKind::Variable:
      return Expr::variable(gi.name);
    case GenKind::SqrtPrime:
      return Expr::sqrt(mpz_class(gi.prime));
    case GenKind::Atom:
      return Expr::func(gi.func, from_ratexpr(*gi.arg));
    case GenKind::Function:
      return Expr::function(gi.name, gi.order, from_ratexpr(*gi.arg));
    case GenKind::Field: {
      std::vector<std::string> names;
      for (GenId v : gi.partials) names.push_back(info(v).name);
      return Expr::field(gi.name, std::move(names));
    }
  }
  return Expr::number(0);
}

Expr poly_expr(const Poly& p) {
  using K = Expr::Kind;
  if (p.is_zero()) return Expr::number(0);
  std::vector<GenId> gs = p.gens();
  std::sort(gs.begin(), gs.end(), key_less);
  auto rank = [&](GenId g) { return std::find(gs.begin(), gs.end(), g) - gs.begin(); };
  using Key = std::vector<std::pair<long, std::uint32_t>>;
  std::vector<std::pair<Key, const Term*>> order;
  for (const auto& t : p.terms()) {
    Key k;
    for (const auto& [g, e] : t.m.factors()) k.emplace_back(rank(g), e);
    std::sort(k.begin(), k.end());
    order.emplace_back(std::move(k), &t);
  }
  auto greater = [](const Key& a, const Key& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size()) {
      if (a[i].first != b[i].first) return a[i].first < b[i].first;
      if (a[i].second != b[i].second) return a[i].second > b[i].second;
      ++i;
    }
    return i < a.size() && i >= b.size();
  };
  std::sort(order.begin(), order.end(),
            [&](const auto& x, const auto& y) { return greater(x.first, y.first); });

  std::optional<Expr> sum;
  for (const auto& [key, t] : order) {
    mpz_class c = abs(t->c);
    std::optional<Expr> prod;
    if (c != 1) prod = Expr::number(mpq_class(c));
    auto push = [&](Expr f) { prod = prod ? Expr::binary(K::Mul, *prod, f) : f; };
    // Square roots of distinct primes print merged: sqrt(2)*sqrt(5) -> sqrt(10).
    mpz_class radicand = 1;
    for (const auto& [r, e] : key) {
      if (is_sqrt_gen(gs[r])) {
        radicand *= info(gs[r]).prime;
        continue;
      }
      Expr f = generator_expr(gs[r]);
      push(e == 1 ? f : Expr::power(f, e));
    }
    if (radicand != 1) push(Expr::sqrt(radicand));
    Expr term = prod ? *prod : Expr::number(mpq_class(c));
    bool negative = t->c < 0;
    if (!sum) {
      sum = negative ? Expr::neg(term) : term;
    } else {
      sum = Expr::binary(negative ? K::Sub : K::Add, *sum, term);
    }
  }
  return *sum;
}

}  // namespace

Expr from_ratexpr(const RatExpr& r) {
  if (auto q = r.as_rational()) return Expr::number(*q);
  Expr n = poly_expr(r.num());
  if (r.is_polynomial()) return n;
  return Expr::binary(Expr::Kind::Div, n, poly_expr(r.den()));
}

Expr normalize(const Expr& e) { return from_ratexpr(to_ratexpr(e)); }

RatExpr parse_rat(std::string_view text, const ParseOptions& opts) {
  return to_ratexpr(parse(text, opts));
}

}  // namespace bgg::sym
