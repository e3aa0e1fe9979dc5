#pragma once

// Shared random generators for property tests.

#include <random>
#include <vector>

#include "bgg/frame/frame235.hpp"
#include "bgg/sym/eval.hpp"

namespace bgg::testing {

using frame::Chart;
using sym::RatExpr;

inline RatExpr random_poly(std::mt19937_64& g, const Chart& chart, int degree, int terms) {
  std::vector<RatExpr> monos = frame::monomials_up_to(chart, degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  RatExpr out;
  for (int k = 0; k < terms; ++k) {
    int n = num(g);
    if (n == 0) n = 1;
    out += RatExpr(mpq_class(n, den(g))) * monos[pick(g)];
  }
  return out;
}

// Polynomial Monge F of degree <= 3 with F_qq > 0 on the box [1/8, 2]^5.
// F_qq is then affine, so positivity at the corners suffices.
inline RatExpr random_monge_f(std::mt19937_64& g) {
  const Chart chart = Chart::monge();
  const sym::GenId q = chart.vars[3];
  for (;;) {
    std::uniform_int_distribution<int> lead(1, 3);
    RatExpr f = RatExpr(lead(g)) * RatExpr::gen(q).pow(2) + random_poly(g, chart, 3, 4);
    RatExpr fqq = sym::diff(f, q, 2);
    bool positive = !fqq.is_zero();
    for (int corner = 0; corner < 32 && positive; ++corner) {
      std::vector<mpq_class> v;
      for (int i = 0; i < 5; ++i) v.push_back((corner >> i) & 1 ? mpq_class(2) : mpq_class(1, 8));
      sym::Number n = sym::eval_at(fqq, sym::Point::make(chart.vars, v));
      positive = std::get<mpq_class>(n) > 0;
    }
    if (positive) return f;
  }
}

inline RatExpr random_density(std::mt19937_64& g) {
  RatExpr s;
  while (s.is_zero()) s = random_poly(g, Chart::monge(), 2, 3);
  return s;
}

}  // namespace bgg::testing
