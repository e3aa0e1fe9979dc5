#include <gtest/gtest.h>

#include "bgg/sym/errors.hpp"
#include "bgg/tractor/tractor.hpp"
#include "support.hpp"

namespace bgg::tractor {
namespace {

using frame::Chart;
using sym::parse_rat;

RatExpr M(const char* s) { return parse_rat(s, Chart::monge().parse_options()); }
RatExpr V(const char* n) { return RatExpr::var(n); }

TractorSlots generic_section() {
  return TractorSlots{V("c"), {V("f1"), V("f2")}, V("u"), {V("t1"), V("t2")}, V("s")};
}

TEST(SlotArithmetic, UnknownIsAbsorbing) {
  Slot u = Slot::unknown();
  EXPECT_FALSE((u * Slot(0)).known());
  EXPECT_FALSE((Slot(3) + u).known());
  EXPECT_FALSE((-u).known());
  EXPECT_THROW(u.value(), bgg::Error);
  EXPECT_EQ(to_string(u), "unknown");
  EXPECT_EQ((Slot(2) * Slot(3)).value(), RatExpr(6));
}

TEST(ChangeScale, ZeroIsIdentity) {
  TractorSlots t = generic_section();
  Upsilon zero{{RatExpr(0), RatExpr(0)}, RatExpr(0), {RatExpr(0), RatExpr(0)}};
  EXPECT_EQ(change_scale(t, zero), t);
}

TEST(ChangeScale, BottomSlotsFollowTheFiltration) {
  TractorSlots t = generic_section();
  Upsilon u{{V("a1"), V("a2")}, V("b"), {V("c1"), V("c2")}};
  TractorSlots r = change_scale(t, u);
  EXPECT_EQ(r.sigma, t.sigma);
  for (int a = 0; a < 2; ++a) EXPECT_EQ(r.tau[a].value(), t.tau[a].value() + V("s") * u.u1[a]);
}

TEST(ChangeScale, SingleGradePieces) {
  TractorSlots t = generic_section();
  const RatExpr s = V("s");
  // Only Upsilon_2: upsilon shifts by -sigma U2, tau is untouched.
  TractorSlots r2 = change_scale(t, Upsilon{{RatExpr(0), RatExpr(0)}, V("b"), {RatExpr(0), RatExpr(0)}});
  EXPECT_EQ(r2.upsilon.value(), V("u") - s * V("b"));
  EXPECT_EQ(r2.tau, t.tau);
  // Only Upsilon_3: phi shifts by sigma U3, upsilon and tau are untouched.
  TractorSlots r3 = change_scale(t, Upsilon{{RatExpr(0), RatExpr(0)}, RatExpr(0), {V("c1"), V("c2")}});
  EXPECT_EQ(r3.phi[0].value(), V("f1") + s * V("c1"));
  EXPECT_EQ(r3.phi[1].value(), V("f2") + s * V("c2"));
  EXPECT_EQ(r3.upsilon, t.upsilon);
  EXPECT_EQ(r3.tau, t.tau);
  // Only Upsilon_1: upsilon picks up -4 L^{ab} U_a tau_b.
  TractorSlots r1 = change_scale(t, Upsilon{{V("a1"), V("a2")}, RatExpr(0), {RatExpr(0), RatExpr(0)}});
  EXPECT_EQ(r1.upsilon.value(), V("u") - 4 * (V("a1") * V("t2") - V("a2") * V("t1")));
}

TEST(ChangeScale, UnknownTopSlotsStayUnknown) {
  TractorSlots t = generic_section();
  t.chi = Slot::unknown();
  TractorSlots r = change_scale(t, Upsilon{{V("a1"), V("a2")}, V("b"), {V("c1"), V("c2")}});
  EXPECT_FALSE(r.chi.known());
  EXPECT_TRUE(r.sigma.known());
  EXPECT_TRUE(r.upsilon.known());
}

TEST(L0Partial, FlatConstantDensity) {
  frame::Frame235 f = frame::Frame235::monge(M("q^2"));
  TractorSlots l = l0_partial(f, RatExpr(1));
  EXPECT_FALSE(l.chi.known());
  EXPECT_FALSE(l.phi[0].known());
  EXPECT_EQ(l.upsilon.value(), RatExpr(0));
  EXPECT_EQ(l.tau[0].value(), RatExpr(0));
  EXPECT_EQ(l.tau[1].value(), RatExpr(0));
  EXPECT_EQ(l.sigma.value(), RatExpr(1));
}

TEST(L0Partial, TauIsFrameDerivative) {
  frame::Frame235 f = frame::Frame235::monge(M("q^2 + x*p"));
  RatExpr s = M("x*q + z");
  TractorSlots l = l0_partial(f, s);
  EXPECT_EQ(l.tau[0].value(), f.e(0).apply(s));
  EXPECT_EQ(l.tau[1].value(), f.e(1).apply(s));
  EXPECT_EQ(l.upsilon.value(), -diamond_sigma(f, s));
}

TEST(TractorDeriv, BottomSlots) {
  frame::Frame235 f = frame::Frame235::monge(M("q^2"));
  RhoSymbols rho = RhoSymbols::abstract();
  TractorSlots t{M("x"), {M("y"), M("p")}, M("q"), {M("z"), M("x*y")}, M("x*q")};
  for (int b = 0; b < 2; ++b) {
    TractorSlots d = tractor_deriv(t, Direction::lower(b), f, rho);
    EXPECT_EQ(d.sigma.value(), f.e(b).apply(t.sigma.value()) - t.tau[b].value());
  }
  TractorSlots dd = tractor_deriv(t, Direction::diamond(), f, rho);
  EXPECT_EQ(dd.sigma.value(), sym::field_symbol("nabla_d_sigma") + M("q"));
  for (int b = 0; b < 2; ++b) {
    TractorSlots du = tractor_deriv(t, Direction::upper(b), f, rho);
    EXPECT_EQ(du.sigma.value(), sym::field_symbol("nabla^" + std::to_string(b + 1) + "_sigma") -
                                    t.phi[b].value());
  }
}

TEST(TractorDeriv, UnknownsPropagateOnlyWhereRead) {
  frame::Frame235 f = frame::Frame235::monge(M("q^2"));
  TractorSlots l = l0_partial(f, M("x"));
  TractorSlots d = tractor_deriv(l, Direction::lower(0), f, RhoSymbols::with_lowest(f));
  EXPECT_FALSE(d.chi.known());
  EXPECT_FALSE(d.phi[0].known());
  EXPECT_FALSE(d.upsilon.known());
  EXPECT_TRUE(d.tau[0].known());
  EXPECT_TRUE(d.tau[1].known());
  EXPECT_TRUE(d.sigma.known());
}

TEST(RhoSymbols, SymmetricStorage) {
  RhoSymbols r = RhoSymbols::abstract();
  EXPECT_EQ(r.lower(0, 1), r.lower(1, 0));
  for (int a = 0; a < 2; ++a) {
    EXPECT_EQ(r.lower_dia(a), r.dia_lower(a));
    EXPECT_EQ(r.dia_upper(a), r.upper_dia(a));
    for (int b = 0; b < 2; ++b) EXPECT_EQ(r.mixed(a, b), r.mixed_up(b, a));
  }
  EXPECT_NE(r.lower(0, 0), r.lower(1, 1));
}

class RandomScale : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override {
    std::mt19937_64 g(500 + GetParam());
    f_ = testing::random_monge_f(g);
    sigma_ = testing::random_density(g);
  }
  RatExpr f_, sigma_;
};

TEST_P(RandomScale, Theta0ViaTractorMatchesFrame) {
  frame::Frame235 f = frame::Frame235::monge(f_);
  Sym2 a = theta0_via_tractor(f, sigma_);
  Sym2 b = frame::theta0(f, sigma_);
  EXPECT_TRUE(f.is_zero(a.a11 - b.a11).zero);
  EXPECT_TRUE(f.is_zero(a.a12 - b.a12).zero);
  EXPECT_TRUE(f.is_zero(a.a22 - b.a22).zero);
}

TEST_P(RandomScale, CodifferentialVanishesOnSplittingOperator) {
  frame::Frame235 f = frame::Frame235::monge(f_);
  RhoSymbols rho = RhoSymbols::with_lowest(f);
  TractorSlots l = l0_partial(f, sigma_);
  TractorSlots c = codiff_nabla(l, f, rho, diamond_sigma(f, sigma_));
  EXPECT_TRUE(f.is_zero(c.tau[0].value()).zero);
  EXPECT_TRUE(f.is_zero(c.tau[1].value()).zero);
  EXPECT_TRUE(f.is_zero(c.upsilon.value()).zero);
  auto k = kostant_tau_row(l, f, rho);
  EXPECT_TRUE(f.is_zero(k[0].value()).zero);
  EXPECT_TRUE(f.is_zero(k[1].value()).zero);
}

TEST_P(RandomScale, KostantTauRowMatchesPrintedRow) {
  frame::Frame235 f = frame::Frame235::monge(f_);
  RhoSymbols rho = RhoSymbols::abstract();
  TractorSlots t{M("x*p"), {M("y + q"), M("z")}, sigma_, {M("p*q"), M("x - z")}, sigma_ * M("x")};
  TractorSlots printed = codiff_nabla(t, f, rho);
  auto k = kostant_tau_row(t, f, rho);
  for (int a = 0; a < 2; ++a) EXPECT_TRUE(f.is_zero(k[a].value() - printed.tau[a].value()).zero);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomScale, ::testing::Range(0, 3));

TEST(Theta0ViaTractor, RationalF) {
  frame::Frame235 f =
      frame::Frame235::monge(M("q^2 - p^4/(x+y)^2 - 14*p^3/(3*(x+y)^2) + 2*p*z/(x+y)"));
  Sym2 t = theta0_via_tractor(f, M("x + y"));
  EXPECT_TRUE(t.a11.is_zero());
  EXPECT_TRUE(t.a12.is_zero());
  EXPECT_TRUE(t.a22.is_zero());
}

}  // namespace
}  // namespace bgg::tractor
