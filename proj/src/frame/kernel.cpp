#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "bgg/frame/frame235.hpp"
#include "bgg/sym/errors.hpp"

namespace bgg::frame {

std::vector<RatExpr> monomials_up_to(const Chart& chart, int degree) {
  std::vector<RatExpr> out;
  const std::size_t n = chart.size();
  std::vector<int> e(n, 0);
  for (int d = 0; d <= degree; ++d) {
    // Exponent vectors of total degree d, in lex order on the chart.
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i + 1 == n) {
        e[i] = left;
        RatExpr m(1);
        for (std::size_t k = 0; k < n; ++k)
          if (e[k]) m *= RatExpr::gen(chart.vars[k]).pow(e[k]);
        out.push_back(std::move(m));
        return;
      }
      for (int k = left; k >= 0; --k) {
        e[i] = k;
        rec(i + 1, left - k);
      }
    };
    if (n > 0) rec(0, d);
  }
  return out;
}

namespace {

void collect_kinds(const RatExpr& e, std::set<GenId>& atoms, bool& opaque) {
  for (GenId g : e.gens()) {
    const auto& gi = sym::info(g);
    if (gi.kind == sym::GenKind::Atom) atoms.insert(g);
    if (gi.kind == sym::GenKind::Function || gi.kind == sym::GenKind::Field) opaque = true;
  }
}

}  // namespace

std::vector<RatExpr> kernel_poly(const Frame235& f, int degree, std::size_t monomial_cap) {
  if (!f.is_monge()) throw Error("kernel_poly needs a Monge frame");
  if (degree < 0) throw Error("kernel_poly: degree must be nonnegative");
  const RatExpr& big_f = f.monge_f();

  std::vector<RatExpr> monos = monomials_up_to(f.chart(), degree);
  std::vector<sym::Vector> rows(3, sym::Vector(monos.size()));
  for (std::size_t j = 0; j < monos.size(); ++j) {
    Sym2 t = theta0(f, monos[j]);
    rows[0][j] = t.a11;
    rows[1][j] = t.a12;
    rows[2][j] = t.a22;
  }

  // Splitting by monomials is sound only when the generators are
  // algebraically independent: at most one transcendental atom, no opaque
  // symbols.
  std::set<GenId> atoms;
  bool opaque = false;
  collect_kinds(big_f, atoms, opaque);
  for (const auto& row : rows)
    for (const auto& e : row) collect_kinds(e, atoms, opaque);
  if (opaque) throw NonRationalF("F contains opaque functions; coefficient splitting is unsound");
  if (atoms.size() > 1)
    throw NonRationalF("F and its derivatives involve " + std::to_string(atoms.size()) +
                       " distinct transcendental atoms; at most one is supported");

  const RatExpr& fqq = f.guards().front();
  std::vector<sym::Poly> declared{fqq.num(), fqq.den(), big_f.den()};
  std::vector<sym::QVector> basis = sym::poly_nullspace(rows, declared, monomial_cap);

  std::vector<RatExpr> out;
  for (const auto& v : basis) {
    mpz_class l = 1;
    for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    RatExpr s;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) s += RatExpr(mpq_class(v[j] * l)) * monos[j];
    out.push_back(std::move(s));
  }
  return out;
}

bool span_contains(const std::vector<RatExpr>& basis, const RatExpr& v) {
  struct Less {
    bool operator()(const sym::Monomial& a, const sym::Monomial& b) const { return compare(a, b) < 0; }
  };
  std::map<sym::Monomial, std::size_t, Less> cols;
  auto index = [&](const RatExpr& e) {
    if (!e.den().is_constant()) throw Error("span_contains needs polynomials");
    for (const auto& t : e.num().terms()) cols.emplace(t.m, cols.size());
  };
  for (const auto& b : basis) index(b);
  index(v);
  auto row = [&](const RatExpr& e) {
    sym::QVector r(cols.size());
    mpz_class d = e.den().constant_value();
    for (const auto& t : e.num().terms()) {
      r[cols.at(t.m)] = mpq_class(t.c, d);
      r[cols.at(t.m)].canonicalize();
    }
    return r;
  };
  std::vector<sym::QVector> rows;
  for (const auto& b : basis) rows.push_back(row(b));
  std::size_t r0 = sym::rational_rank(rows, cols.size());
  rows.push_back(row(v));
  return sym::rational_rank(rows, cols.size()) == r0;
}

}  // namespace bgg::frame
