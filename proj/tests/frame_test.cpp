#include <gtest/gtest.h>

#include "bgg/frame/frame235.hpp"
#include "bgg/sym/errors.hpp"
#include "support.hpp"

namespace bgg::frame {
namespace {

using sym::parse_rat;

RatExpr M(const char* s) { return parse_rat(s, Chart::monge().parse_options()); }

void expect_zero(const Frame235& f, const RatExpr& e, const std::string& what) {
  EXPECT_TRUE(f.is_zero(e).zero) << what << ": " << sym::to_string(e);
}

void expect_same(const Frame235& f, const Sym2& a, const Sym2& b, const std::string& what) {
  expect_zero(f, a.a11 - b.a11, what + " 11");
  expect_zero(f, a.a12 - b.a12, what + " 12");
  expect_zero(f, a.a22 - b.a22, what + " 22");
}

class RandomMonge : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override {
    std::mt19937_64 g(1000 + GetParam());
    f_ = testing::random_monge_f(g);
    sigma_ = testing::random_density(g);
    sigma2_ = testing::random_density(g);
  }
  RatExpr f_, sigma_, sigma2_;
};

TEST_P(RandomMonge, GeneralReebAndConnectionMatchClosedForms) {
  Frame235 fr = Frame235::monge(f_);
  VectorField d = fr.reeb() - fr.reeb_general();
  for (const auto& c : d.coeffs()) expect_zero(fr, c, "reeb");
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        expect_zero(fr, fr.connection()(a, b, c) - fr.connection_general()(a, b, c), "connection");
}

TEST_P(RandomMonge, PsiMapsSatisfyLeibniz) {
  Frame235 fr = Frame235::monge(f_);
  RatExpr g = sigma_;
  RatExpr rg = fr.reeb().apply(g);
  for (int i = 0; i < 2; ++i) {
    const VectorField& gamma = fr.e(i);
    VectorField d1 = psi1(fr, g * gamma) - g * psi1(fr, gamma) - rg * gamma;
    VectorField d2 = psi2(fr, g * gamma) - g * psi2(fr, gamma) - rg * gamma;
    for (const auto& c : d1.coeffs()) expect_zero(fr, c, "psi1");
    for (const auto& c : d2.coeffs()) expect_zero(fr, c, "psi2");
  }
}

TEST_P(RandomMonge, RhoPathsAgree) {
  Frame235 fr = Frame235::monge(f_);
  RhoResult closed = rho_lowest(fr, RhoPath::ClosedForm);
  RhoResult dual = rho_lowest(fr, RhoPath::RhoT);
  expect_same(fr, closed.p, dual.p, "rho");
  expect_zero(fr, dual.antisymmetric, "antisymmetric part");
}

TEST_P(RandomMonge, Theta0IsLinear) {
  Frame235 fr = Frame235::monge(f_);
  RatExpr a(mpq_class(-7, 3));
  Sym2 lhs = theta0(fr, a * sigma_ + sigma2_);
  Sym2 t1 = theta0(fr, sigma_), t2 = theta0(fr, sigma2_);
  expect_same(fr, lhs, Sym2{a * t1.a11 + t2.a11, a * t1.a12 + t2.a12, a * t1.a22 + t2.a22},
              "linearity");
}

// Independent transcription of the Monge-form components of Theta_0 as
// operator words in Q and X.
TEST_P(RandomMonge, MongeComponentsMatchOperatorWords) {
  Frame235 fr = Frame235::monge(f_);
  const Chart ch = Chart::monge();
  const RatExpr& F = f_;
  const RatExpr p = M("p"), q = M("q");
  VectorField Q = VectorField::coordinate(ch, 3);
  VectorField X(ch, {RatExpr(1), p, q, RatExpr(0), F});
  VectorField QX = bracket(Q, X);
  using W = std::vector<const VectorField*>;
  auto w = [](W word, const RatExpr& e) { return apply_word(word, e); };

  RatExpr Fz = sym::diff(F, ch.vars[4]);
  RatExpr Q2F = w({&Q, &Q}, F), Q3F = w({&Q, &Q, &Q}, F), Q4F = w({&Q, &Q, &Q, &Q}, F);
  RatExpr XQ2F = w({&X, &Q, &Q}, F);
  RatExpr rc = XQ2F / Q2F - Fz;
  RatExpr rd = Q3F / Q2F;
  RatExpr rg = (w({&Q, &X, &X}, F) - 3 * w({&X, &QX}, F)) / Q2F;

  const RatExpr& s = sigma_;
  RatExpr half(mpq_class(1, 2)), tenth(mpq_class(1, 10));
  Sym2 hess{w({&Q, &Q}, s),
            half * (w({&Q, &X}, s) + w({&X, &Q}, s) - rc * Q.apply(s) + rd * X.apply(s)),
            w({&X, &X}, s) - rg * Q.apply(s) + rc * X.apply(s)};

  RatExpr pqq = tenth * (-3 * Q4F / Q2F + 4 * Q3F.pow(2) / Q2F.pow(2));
  RatExpr pqx = tenth * ((-2 * w({&Q, &X, &Q, &Q}, F) - w({&X, &Q, &Q, &Q}, F)) / Q2F +
                         4 * Q3F * XQ2F / Q2F.pow(2) - Q3F * Fz / Q2F + 2 * Q.apply(Fz));
  RatExpr pxx =
      tenth * ((-w({&Q, &Q, &X, &X}, F) + 3 * w({&Q, &X, &QX}, F) + 2 * w({&X, &Q, &Q, &X}, F) -
                4 * w({&X, &Q, &X, &Q}, F)) /
                   Q2F +
               Q3F * (3 * w({&Q, &X, &X}, F) - 9 * w({&X, &QX}, F)) / Q2F.pow(2) +
               XQ2F.pow(2) / Q2F.pow(2) - Fz.pow(2));
  Sym2 rho{pqq, pqx, pxx};

  MongeTheta0 parts = monge_theta0_parts(fr, s);
  expect_same(fr, parts.hessian, hess, "Sym nabla^2 sigma");
  expect_same(fr, parts.rho, rho, "P");
  expect_same(fr, parts.theta0(), theta0(fr, s), "Theta_0");
}

TEST_P(RandomMonge, TraceCondition) {
  Frame235 fr = Frame235::monge(f_);
  for (const Connection* c : {&fr.connection(), &fr.connection_general()})
    for (int g = 0; g < 2; ++g) expect_zero(fr, (*c)(0, g, 0) + (*c)(1, g, 1), "trace");
}

TEST_P(RandomMonge, ReebProjectsToTheta) {
  Frame235 fr = Frame235::monge(f_);
  auto k = fr.decompose(fr.reeb() - bracket(fr.e(0), fr.e(1)));
  for (int i = 2; i < 5; ++i) expect_zero(fr, k[i], "q_-2(R) - theta");
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomMonge, ::testing::Range(0, 5));

Frame235 rolling() {
  Chart ch = Chart::of({"zeta", "theta", "t", "beta", "phi"});
  auto P = [&](const char* s) { return parse_rat(s, ch.parse_options()); };
  VectorField e1(ch, {P("1"), P("0"), P("cos(phi)"), P("csch(t)*sin(phi)"),
                      P("-coth(t)*sin(phi)")});
  VectorField e2(ch, {P("0"), P("csc(zeta)"), P("-sin(phi)"), P("csch(t)*cos(phi)"),
                      P("-coth(t)*cos(phi) + cot(zeta)")});
  return Frame235::general(ch, e1, e2, {P("sin(zeta)"), P("sinh(t)")});
}

TEST(GeneralFrame, RollingInvariants) {
  Frame235 fr = rolling();
  EXPECT_FALSE(fr.is_monge());
  const Connection& c = fr.connection();
  for (int g = 0; g < 2; ++g) expect_zero(fr, c(0, g, 0) + c(1, g, 1), "trace");
  auto k = fr.decompose(fr.reeb() - bracket(fr.e(0), fr.e(1)));
  for (int i = 2; i < 5; ++i) expect_zero(fr, k[i], "q_-2(R) - theta");
  RhoResult rho = rho_lowest(fr, RhoPath::RhoT);
  sym::ZeroVerdict z = fr.is_zero(rho.p.a11);
  EXPECT_TRUE(z.zero);
  EXPECT_TRUE(z.probabilistic);
  expect_zero(fr, rho.p.a12, "rho 12");
  expect_zero(fr, rho.p.a22, "rho 22");
  EXPECT_THROW(rho_lowest(fr, RhoPath::ClosedForm), bgg::Error);
}

TEST(GeneralFrame, AdaptedBasisDecomposes) {
  Frame235 fr = Frame235::monge(M("q^2 + x*p"));
  const auto& basis = fr.adapted_basis();
  for (int i = 0; i < 5; ++i) {
    auto k = fr.decompose(basis[i]);
    for (int j = 0; j < 5; ++j) EXPECT_EQ(k[j], RatExpr(i == j ? 1 : 0));
  }
}

TEST(FrameErrors, RejectsDegenerateInput) {
  EXPECT_THROW(Frame235::monge(M("p + x*q")), bgg::NotA235Distribution);
  Chart ch = Chart::monge();
  EXPECT_THROW(Frame235::general(ch, VectorField::coordinate(ch, 0), VectorField::coordinate(ch, 1),
                                 {}),
               bgg::DegenerateFrame);
}

TEST(Theta0, FlatModelGenerators) {
  Frame235 fr = Frame235::monge(M("q^2"));
  for (const char* s : {"2*x*p*q - 6*y*q + 4*p^2 - 3*x*z", "2*p*q - 3*z", "x^2*q - 4*x*p + 6*y",
                        "x*q - 2*p", "q", "x", "1"}) {
    ScaleCheck sc = check_scale(fr, M(s));
    EXPECT_EQ(sc.verdict, Verdict::Solution) << s;
  }
  EXPECT_EQ(check_scale(fr, M("q^2")).verdict, Verdict::NonSolution);
}

TEST(Theta0, RationalF) {
  Frame235 fr =
      Frame235::monge(M("q^2 - p^4/(x+y)^2 - 14*p^3/(3*(x+y)^2) + 2*p*z/(x+y)"));
  ScaleCheck sc = check_scale(fr, M("x + y"));
  EXPECT_EQ(sc.verdict, Verdict::Solution);
  for (const auto& z : sc.zeros) EXPECT_FALSE(z.probabilistic);
}

TEST(Theta0, NonexampleQQComponent) {
  Frame235 fr = Frame235::monge(M("y + exp(q)"));
  RatExpr s = M("x*q + exp(q/3)");
  RatExpr expected = sym::diff(s, Chart::monge().vars[3], 2) - RatExpr(mpq_class(1, 10)) * s;
  EXPECT_TRUE(fr.is_zero(theta0(fr, s).a11 - expected).zero);
}

TEST(Theta0, HessianUsesConnection) {
  Frame235 fr = Frame235::monge(M("q^2"));
  Mat2 h = hessian(fr, M("x*q"));
  // Q(Q(xq)) = 0 and there is no Gamma^c_{QQ} on the flat model.
  EXPECT_TRUE(h[0][0].is_zero());
}

TEST(Kernel, FlatModelDegreeOne) {
  Frame235 fr = Frame235::monge(M("q^2"));
  auto basis = kernel_poly(fr, 1);
  EXPECT_EQ(basis.size(), 3u);
  for (const char* s : {"q", "x", "1"}) EXPECT_TRUE(span_contains(basis, M(s))) << s;
  EXPECT_FALSE(span_contains(basis, M("p")));
}

TEST(Kernel, RationalFDegreeOne) {
  Frame235 fr =
      Frame235::monge(M("q^2 - p^4/(x+y)^2 - 14*p^3/(3*(x+y)^2) + 2*p*z/(x+y)"));
  auto basis = kernel_poly(fr, 1);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_TRUE(span_contains(basis, M("x + y")));
}

TEST(Kernel, Errors) {
  EXPECT_THROW(kernel_poly(Frame235::monge(M("q^2 + exp(x) + sin(y)")), 1), bgg::NonRationalF);
  EXPECT_THROW(kernel_poly(Frame235::monge(M("q^2")), 3, 10), bgg::MonomialCapExceeded);
}

TEST(Kernel, MonomialsByDegree) {
  auto m = monomials_up_to(Chart::monge(), 2);
  EXPECT_EQ(m.size(), 21u);
  EXPECT_EQ(m.front(), RatExpr(1));
}

TEST(Iota7, FlatConstantDensityGivesReeb) {
  Frame235 fr = Frame235::monge(M("q^2"));
  EXPECT_EQ(iota7(fr, RatExpr(1)), fr.reeb());
  EXPECT_EQ(fr.reeb(), bracket(fr.e(0), fr.e(1)));
  EXPECT_TRUE(iota7(fr, RatExpr(0)).is_zero());
}

}  // namespace
}  // namespace bgg::frame
