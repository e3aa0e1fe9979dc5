#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "bgg/sym/eval.hpp"
#include "bgg/sym/ratexpr.hpp"

namespace bgg::sym {

using Matrix = std::vector<std::vector<RatExpr>>;
using Vector = std::vector<RatExpr>;
using QVector = std::vector<mpq_class>;

struct SolveOptions {
  std::vector<RatExpr> guards;
  std::vector<GenId> chart;
  std::uint64_t seed = 0x5eed;
};

// Solves A X = B for X (columns of B are independent right-hand sides) by
// fraction-free elimination. Pivots are chosen among entries that are
// nonzero at a generic sample point, so hidden transcendental zeros are not
// divided by. Throws SingularMatrix naming the first column without a pivot.
Matrix solve_linear(const Matrix& a, const Matrix& b, const SolveOptions& opts = {});
Vector solve_linear(const Matrix& a, const Vector& b, const SolveOptions& opts = {});

// Exact nullspace of a rational matrix; the basis vectors are in reduced
// echelon form with a 1 in each free position.
std::vector<QVector> rational_nullspace(const std::vector<QVector>& rows, std::size_t ncols);

// Rank of a rational matrix.
std::size_t rational_rank(std::vector<QVector> rows, std::size_t ncols);

// Nullspace of the linear system sum_j c_j coeffs[i][j] = 0 (for every i),
// where the coefficients are expressions in the chart. Each row is first
// multiplied by a product of the declared denominators until it is
// polynomial; the remaining polynomial identity is split into one rational
// equation per monomial (over every non-sqrt generator) and per sqrt basis
// element. Throws NonPolynomialRow when a row keeps an undeclared
// denominator and MonomialCapExceeded when more than `monomial_cap` distinct
// monomials appear (0 means no cap).
std::vector<QVector> poly_nullspace(const std::vector<Vector>& coeffs,
                                    const std::vector<Poly>& declared_denominators,
                                    std::size_t monomial_cap = 0);

// Same, for rows given as expressions linear in the unknown generators.
std::vector<QVector> poly_nullspace(const std::vector<RatExpr>& rows,
                                    const std::vector<GenId>& unknowns,
                                    const std::vector<Poly>& declared_denominators,
                                    std::size_t monomial_cap = 0);

}  // namespace bgg::sym
