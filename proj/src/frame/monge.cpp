// Closed forms in Monge normal form, in the scale Q ^ X.

#include "internal.hpp"

namespace bgg::frame::detail {

namespace {

RatExpr r(long n, long d = 1) { return RatExpr(mpq_class(n, d)); }

}  // namespace

Monge::Monge(const RatExpr& f_in) : f(f_in) {
  Chart ch = Chart::monge();
  GenId p = ch.vars[2], qv = ch.vars[3], z = ch.vars[4];
  q = VectorField::coordinate(ch, 3);
  x = VectorField(ch, {RatExpr(1), RatExpr::gen(p), RatExpr::gen(qv), RatExpr(0), f});
  c = bracket(q, x);
  fqq = sym::diff(f, qv, 2);
  fz = sym::diff(f, z);
  rc = word({&x, &q, &q}) / fqq - fz;
  rd = word({&q, &q, &q}) / fqq;
  rg = (word({&q, &x, &x}) - 3 * word({&x, &c})) / fqq;
}

RatExpr Monge::word(std::initializer_list<const VectorField*> w) const {
  return apply_word(std::vector<const VectorField*>(w), f);
}

VectorField monge_reeb(const Monge& m) { return m.c + m.rc * m.q - m.rd * m.x; }

Connection monge_connection(const Monge& m) {
  Connection g;
  // nabla_Q Q = nabla_Q X = 0.
  g(0, 1, 0) = m.rc;
  g(1, 1, 0) = -m.rd;
  g(0, 1, 1) = m.rg;
  g(1, 1, 1) = -m.rc;
  return g;
}

Sym2 monge_rho(const Monge& m) {
  const VectorField *Q = &m.q, *X = &m.x, *C = &m.c;
  const RatExpr& fqq = m.fqq;
  RatExpr q3 = m.word({Q, Q, Q});
  RatExpr xq2 = m.word({X, Q, Q});
  RatExpr fqq2 = fqq * fqq;

  Sym2 p;
  p.a11 = r(1, 10) * (-3 * m.word({Q, Q, Q, Q}) / fqq + 4 * q3 * q3 / fqq2);
  p.a12 = r(1, 10) * ((-2 * m.word({Q, X, Q, Q}) - m.word({X, Q, Q, Q})) / fqq +
                      4 * q3 * xq2 / fqq2 - q3 * m.fz / fqq + 2 * Q->apply(m.fz));
  RatExpr qx2 = m.word({Q, X, X});
  RatExpr xc = m.word({X, C});
  p.a22 = r(1, 10) * ((-m.word({Q, Q, X, X}) + 3 * m.word({Q, X, C}) + 2 * m.word({X, Q, Q, X}) -
                       4 * m.word({X, Q, X, Q})) /
                          fqq +
                      q3 * (3 * qx2 - 9 * xc) / fqq2 + xq2 * xq2 / fqq2 - m.fz * m.fz);
  return p;
}

}  // namespace bgg::frame::detail

namespace bgg::frame {

MongeTheta0 monge_theta0_parts(const Frame235& f, const RatExpr& sigma) {
  detail::Monge m(f.monge_f());
  const VectorField *Q = &m.q, *X = &m.x;
  auto w = [&](std::initializer_list<const VectorField*> word) {
    return apply_word(std::vector<const VectorField*>(word), sigma);
  };
  RatExpr qs = Q->apply(sigma), xs = X->apply(sigma);
  MongeTheta0 out;
  out.hessian.a11 = w({Q, Q});
  out.hessian.a12 = RatExpr(mpq_class(1, 2)) * (w({Q, X}) + w({X, Q}) - m.rc * qs + m.rd * xs);
  out.hessian.a22 = w({X, X}) - m.rg * qs + m.rc * xs;
  out.rho = detail::monge_rho(m);
  out.sigma = sigma;
  return out;
}

Sym2 MongeTheta0::theta0() const {
  return {hessian.a11 - rho.a11 * sigma, hessian.a12 - rho.a12 * sigma,
          hessian.a22 - rho.a22 * sigma};
}

}  // namespace bgg::frame
