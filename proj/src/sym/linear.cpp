#include "bgg/sym/linear.hpp"

#include <algorithm>
#include <map>

#include "bgg/sym/errors.hpp"

namespace bgg::sym {

namespace {

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

bool any_sqrt(const Matrix& a, const Matrix& b) {
  for (const auto* m : {&a, &b})
    for (const auto& row : *m)
      for (const auto& e : row)
        if (e.num().has_sqrt()) return true;
  return false;
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  Poly g = gcd(a, b);
  auto q = divide(a, g);
  if (!q) throw Error("internal error: inexact polynomial division");
  return (*q * b).stable_normal();
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_one()) return a;
  auto q = divide(a, b);
  if (!q) throw Error("internal error: inexact polynomial division");
  return std::move(*q);
}

// A candidate pivot is usable when it is not the zero function. Entries
// without transcendental atoms are decided by their normal form alone.
class PivotTest {
 public:
  explicit PivotTest(const SolveOptions& opts) : opts_(opts) {}

  bool nonzero(const RatExpr& e) {
    if (e.is_zero()) return false;
    ZeroTestOptions zo;
    zo.seed = opts_.seed;
    zo.chart = opts_.chart;
    return !is_zero(e, opts_.guards, zo).zero;
  }

 private:
  const SolveOptions& opts_;
};

std::size_t pick_pivot(const std::vector<RatExpr>& column, std::size_t from, PivotTest& test) {
  std::size_t best = column.size();
  std::size_t best_size = 0;
  for (std::size_t i = from; i < column.size(); ++i) {
    const RatExpr& e = column[i];
    if (e.is_zero()) continue;
    std::size_t size = e.num().size() + e.den().size();
    if (best != column.size() && size >= best_size) continue;
    if (!test.nonzero(e)) continue;
    best = i;
    best_size = size;
  }
  return best;
}

[[noreturn]] void singular(std::size_t col) {
  throw SingularMatrix("singular matrix: no nonzero pivot in column " + std::to_string(col),
                       col);
}

// Gaussian elimination over the expression field. Used when sqrt symbols
// appear, since exact polynomial division needs sqrt-free divisors.
Matrix solve_field(Matrix a, Matrix b, const SolveOptions& opts) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b.front().size();
  PivotTest test(opts);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<RatExpr> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = a[i][k];
    std::size_t p = pick_pivot(col, k, test);
    if (p == n) singular(k);
    std::swap(a[k], a[p]);
    std::swap(b[k], b[p]);
    RatExpr inv = a[k][k].inverse();
    for (std::size_t j = k; j < n; ++j) a[k][j] *= inv;
    for (std::size_t j = 0; j < m; ++j) b[k][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k].is_zero()) continue;
      RatExpr f = a[i][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      for (std::size_t j = 0; j < m; ++j) b[i][j] -= f * b[k][j];
    }
  }
  return b;
}

// Bareiss elimination on the polynomial matrix obtained by clearing each
// row's denominators, followed by back substitution in the field.
Matrix solve_bareiss(const Matrix& a_in, const Matrix& b_in, const SolveOptions& opts) {
  const std::size_t n = a_in.size();
  const std::size_t m = b_in.empty() ? 0 : b_in.front().size();
  std::vector<std::vector<Poly>> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    Poly l(1);
    for (const auto& e : a_in[i]) l = lcm(l, e.den());
    for (const auto& e : b_in[i]) l = lcm(l, e.den());
    for (const auto& e : a_in[i]) a[i].push_back(e.num() * exact_div(l, e.den()));
    for (const auto& e : b_in[i]) b[i].push_back(e.num() * exact_div(l, e.den()));
  }

  PivotTest test(opts);
  Poly prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<RatExpr> col(n);
    for (std::size_t i = k; i < n; ++i) col[i] = RatExpr(a[i][k]);
    std::size_t p = pick_pivot(col, k, test);
    if (p == n) singular(k);
    std::swap(a[k], a[p]);
    std::swap(b[k], b[p]);
    const Poly& piv = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Poly f = a[i][k];
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = exact_div(piv * a[i][j] - f * a[k][j], prev);
      for (std::size_t j = 0; j < m; ++j) b[i][j] = exact_div(piv * b[i][j] - f * b[k][j], prev);
      a[i][k] = Poly();
    }
    prev = piv;
  }

  Matrix x(n, std::vector<RatExpr>(m));
  for (std::size_t jj = 0; jj < m; ++jj) {
    for (std::size_t ii = n; ii-- > 0;) {
      RatExpr acc(b[ii][jj]);
      for (std::size_t k = ii + 1; k < n; ++k)
        if (!a[ii][k].is_zero()) acc -= RatExpr(a[ii][k]) * x[k][jj];
      x[ii][jj] = acc / RatExpr(a[ii][ii]);
    }
  }
  return x;
}

}  // namespace

Matrix solve_linear(const Matrix& a, const Matrix& b, const SolveOptions& opts) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw Error("solve_linear: matrix is not square");
  if (b.size() != n) throw Error("solve_linear: right-hand side has the wrong length");
  if (n == 0) return {};
  if (any_sqrt(a, b)) return solve_field(a, b, opts);
  return solve_bareiss(a, b, opts);
}

Vector solve_linear(const Matrix& a, const Vector& b, const SolveOptions& opts) {
  Matrix bm;
  bm.reserve(b.size());
  for (const auto& e : b) bm.push_back({e});
  Matrix x = solve_linear(a, bm, opts);
  Vector out;
  out.reserve(x.size());
  for (auto& row : x) out.push_back(std::move(row.front()));
  return out;
}

// ------------------------------------------------------------ rational part

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<QVector>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    mpq_class inv = 1 / rows[r][c];
    for (std::size_t j = c; j < ncols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      mpq_class f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rational_rank(std::vector<QVector> rows, std::size_t ncols) {
  for (const auto& row : rows)
    if (row.size() != ncols) throw Error("rational_rank: ragged matrix");
  return rref(rows, ncols).size();
}

std::vector<QVector> rational_nullspace(const std::vector<QVector>& rows_in, std::size_t ncols) {
  std::vector<QVector> rows = rows_in;
  for (const auto& row : rows)
    if (row.size() != ncols) throw Error("rational_nullspace: ragged matrix");
  std::vector<std::size_t> pivots = rref(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    QVector v(ncols, mpq_class(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<QVector> poly_nullspace(const std::vector<Vector>& coeffs,
                                    const std::vector<Poly>& declared, std::size_t cap) {
  std::size_t ncols = 0;
  for (const auto& row : coeffs) ncols = std::max(ncols, row.size());
  std::map<Monomial, QVector, MonomialLess> eqs;
  std::vector<QVector> rows;

  for (std::size_t r = 0; r < coeffs.size(); ++r) {
    const Vector& row = coeffs[r];
    Poly l(1);
    for (const auto& e : row) l = lcm(l, e.den());
    // Every factor of the common denominator must come from a declared one.
    Poly rest = l;
    bool progress = true;
    while (!rest.is_constant() && progress) {
      progress = false;
      for (const auto& d : declared) {
        if (d.is_constant()) continue;
        Poly g = gcd(rest, d);
        if (g.is_constant()) continue;
        rest = exact_div(rest, g);
        progress = true;
      }
    }
    if (!rest.is_constant())
      throw NonPolynomialRow("row " + std::to_string(r) + " has the undeclared denominator " +
                             to_string(rest));
    eqs.clear();
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j].is_zero()) continue;
      Poly p = row[j].num() * exact_div(l, row[j].den());
      for (const auto& t : p.terms()) {
        auto it = eqs.find(t.m);
        if (it == eqs.end()) it = eqs.emplace(t.m, QVector(ncols, mpq_class(0))).first;
        it->second[j] += mpq_class(t.c);
      }
    }
    for (auto& [mono, eq] : eqs) rows.push_back(std::move(eq));
    if (cap != 0 && rows.size() > cap)
      throw MonomialCapExceeded("more than " + std::to_string(cap) +
                                " monomial equations while collecting coefficients");
  }
  return rational_nullspace(rows, ncols);
}

std::vector<QVector> poly_nullspace(const std::vector<RatExpr>& rows,
                                    const std::vector<GenId>& unknowns,
                                    const std::vector<Poly>& declared, std::size_t cap) {
  std::vector<Vector> coeffs;
  coeffs.reserve(rows.size());
  std::vector<std::pair<GenId, RatExpr>> zero;
  for (GenId u : unknowns) zero.emplace_back(u, RatExpr(0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!subst(rows[r], zero).is_zero())
      throw NonPolynomialRow("row " + std::to_string(r) + " is not homogeneous in the unknowns");
    Vector v;
    v.reserve(unknowns.size());
    for (GenId u : unknowns) {
      RatExpr c = diff(rows[r], u);
      for (GenId g : c.gens())
        if (std::find(unknowns.begin(), unknowns.end(), g) != unknowns.end())
          throw NonPolynomialRow("row " + std::to_string(r) + " is not linear in the unknowns");
      v.push_back(std::move(c));
    }
    coeffs.push_back(std::move(v));
  }
  return poly_nullspace(coeffs, declared, cap);
}

}  // namespace bgg::sym
