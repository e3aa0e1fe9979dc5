// Acceptance suite: one PASS/FAIL line per criterion, with its time budget.
// Exits 1 when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "bgg/frame/frame235.hpp"
#include "bgg/g2/g2.hpp"
#include "bgg/sym/errors.hpp"
#include "bgg/tractor/tractor.hpp"
#include "support.hpp"

using namespace bgg;
using frame::Chart;
using frame::Frame235;
using frame::Sym2;
using sym::RatExpr;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << what;
      pass = false;
    }
  }
};

RatExpr M(const std::string& s, const sym::ParseOptions& o = Chart::monge().parse_options()) {
  return sym::parse_rat(s, o);
}

bool zero(const Frame235& f, const RatExpr& e) { return f.is_zero(e).zero; }

bool same(const Frame235& f, const Sym2& a, const Sym2& b) {
  return zero(f, a.a11 - b.a11) && zero(f, a.a12 - b.a12) && zero(f, a.a22 - b.a22);
}

const char* kRationalF = "q^2 - p^4/(x+y)^2 - 14*p^3/(3*(x+y)^2) + 2*p*z/(x+y)";

void flat_kernel(Outcome& o) {
  Frame235 f = Frame235::monge(M("q^2"));
  auto basis = frame::kernel_poly(f, 3);
  o.require(basis.size() == 7, "dimension " + std::to_string(basis.size()));
  for (const char* g : {"2*x*p*q - 6*y*q + 4*p^2 - 3*x*z", "2*p*q - 3*z", "x^2*q - 4*x*p + 6*y",
                        "x*q - 2*p", "q", "x", "1"})
    o.require(frame::span_contains(basis, M(g)), std::string("missing ") + g);
}

void rational_f(Outcome& o) {
  Frame235 f = Frame235::monge(M(kRationalF));
  frame::ScaleCheck sc = frame::check_scale(f, M("x + y"));
  o.require(sc.verdict == frame::Verdict::Solution, frame::to_string(sc.verdict));
  o.require(sc.theta.a11.is_zero() && sc.theta.a12.is_zero() && sc.theta.a22.is_zero(),
            "components do not normalize to 0");
  for (const auto& z : sc.zeros) o.require(!z.probabilistic, "probabilistic zero");
}

void fq_family(Outcome& o) {
  sym::ParseOptions po = Chart::monge().parse_options();
  po.functions = {"s"};
  const sym::GenId q = Chart::monge().vars[3];
  for (const char* fs : {"q^2", "q^3", "exp(q)"}) {
    RatExpr F = M(fs);
    Frame235 f = Frame235::monge(F);
    RatExpr s = M("s(q)", po);
    frame::MongeTheta0 parts = frame::monge_theta0_parts(f, s);
    Sym2 t = parts.theta0();
    o.require(t.a12.is_zero(), std::string(fs) + ": (Q,X) nonzero");
    o.require(t.a22.is_zero(), std::string(fs) + ": (X,X) nonzero");
    RatExpr f2 = sym::diff(F, q, 2), f3 = sym::diff(F, q, 3), f4 = sym::diff(F, q, 4);
    RatExpr p = RatExpr(mpq_class(1, 10)) * (-3 * f4 / f2 + 4 * f3.pow(2) / f2.pow(2));
    o.require(parts.hessian.a11 == sym::diff(s, q, 2), std::string(fs) + ": Hessian term");
    o.require(parts.rho.a11 == p, std::string(fs) + ": Rho term");
    o.require(t.a11 == sym::diff(s, q, 2) - p * s, std::string(fs) + ": (Q,Q)");
  }
}

void rolling(Outcome& o, bool& probabilistic) {
  Chart ch = Chart::of({"zeta", "theta", "t", "beta", "phi"});
  auto P = [&](const char* s) { return M(s, ch.parse_options()); };
  frame::VectorField e1(ch, {P("1"), P("0"), P("cos(phi)"), P("csch(t)*sin(phi)"),
                             P("-coth(t)*sin(phi)")});
  frame::VectorField e2(ch, {P("0"), P("csc(zeta)"), P("-sin(phi)"), P("csch(t)*cos(phi)"),
                             P("-coth(t)*cos(phi) + cot(zeta)")});
  std::vector<RatExpr> guards{P("sin(zeta)"), P("sinh(t)")};
  Frame235 f = Frame235::general(ch, e1, e2, guards);
  frame::RhoResult rho = frame::rho_lowest(f, frame::RhoPath::RhoT);
  sym::PointSampler sampler(ch.vars, guards, 0x235235);
  const sym::Real tol("1e-40");
  for (const RatExpr* e : {&rho.p.a11, &rho.p.a12, &rho.p.a22}) {
    sym::ZeroVerdict z = f.is_zero(*e);
    o.require(z.zero, "nonzero entry");
    probabilistic = probabilistic || z.probabilistic;
    for (int k = 0; k < 16; ++k) o.require(abs(sampler.sample(*e)) < tol, "sample above 1e-40");
  }
  o.require(probabilistic, "expected a probabilistic verdict");
}

void nonexample(Outcome& o) {
  Frame235 f = Frame235::monge(M("y + exp(q)"));
  const sym::GenId q = Chart::monge().vars[3];
  sym::ParseOptions po = Chart::monge().parse_options();
  po.functions = {"s"};
  for (const char* s : {"s(q)", "s(x*p - z + q^2)", "x*y*q^2 + exp(2*q) - p"}) {
    RatExpr sigma = M(s, po);
    Sym2 t = frame::theta0(f, sigma);
    o.require(t.a11 == sym::diff(sigma, q, 2) - RatExpr(mpq_class(1, 10)) * sigma,
              std::string("(Q,Q) for ") + s);
  }
  for (int d = 1; d <= 3; ++d)
    o.require(frame::kernel_poly(f, d).empty(), "nonzero kernel at degree " + std::to_string(d));
  Chart ch = Chart::monge();
  sym::Point pt = sym::Point::make(ch.vars, {mpq_class(1, 3), mpq_class(1, 2), mpq_class(2, 5),
                                            mpq_class(3, 4), mpq_class(1, 7)});
  for (const char* s : {"exp(q/sqrt(10))", "exp(-q/sqrt(10))", "3*exp(q/sqrt(10))"}) {
    Sym2 t = frame::theta0(f, M(s));
    sym::Real v = sym::to_real(sym::eval_at(t.a22, pt));
    o.require(abs(v) > sym::Real("1e-20"), std::string("(X,X) not certified nonzero for ") + s);
  }
}

void g2_structure(Outcome& o) {
  g2::Report r = g2::verify_structure();
  for (const auto& c : r.checks) o.require(c.pass, c.name + ": " + c.detail);
}

void dual_paths(Outcome& o) {
  for (int i = 0; i < 5; ++i) {
    std::mt19937_64 g(7000 + i);
    Frame235 f = Frame235::monge(testing::random_monge_f(g));
    frame::VectorField dr = f.reeb() - f.reeb_general();
    for (const auto& c : dr.coeffs()) o.require(zero(f, c), "(a) Reeb field");
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          o.require(zero(f, f.connection()(a, b, c) - f.connection_general()(a, b, c)),
                    "(a) connection");
    frame::RhoResult closed = frame::rho_lowest(f, frame::RhoPath::ClosedForm);
    frame::RhoResult dual = frame::rho_lowest(f, frame::RhoPath::RhoT);
    o.require(same(f, closed.p, dual.p), "(b) Rho");
    o.require(zero(f, dual.antisymmetric), "(b) antisymmetric part");
    for (int k = 0; k < 3; ++k) {
      RatExpr s = testing::random_density(g);
      o.require(same(f, tractor::theta0_via_tractor(f, s), frame::theta0(f, s)),
                "(c) tractor Theta_0");
    }
  }
}

void representation(Outcome& o) {
  g2::Report r = g2::verify_structure();
  for (const auto& c : r.checks)
    if (c.name == "representation" || c.name == "pairing_invariance")
      o.require(c.pass, c.name + ": " + c.detail);

  std::mt19937_64 g(8000);
  Frame235 f = Frame235::monge(testing::random_monge_f(g));
  RatExpr h = testing::random_density(g);
  RatExpr rh = f.reeb().apply(h);
  for (int i = 0; i < 2; ++i) {
    const frame::VectorField& e = f.e(i);
    for (const auto& psi : {frame::psi1, frame::psi2}) {
      frame::VectorField d = psi(f, h * e) - h * psi(f, e) - rh * e;
      for (const auto& c : d.coeffs()) o.require(zero(f, c), "Leibniz");
    }
  }

  auto V = [](const char* n) { return RatExpr::var(n); };
  tractor::TractorSlots t{V("c"), {V("f1"), V("f2")}, V("u"), {V("t1"), V("t2")}, V("s")};
  tractor::Upsilon u{{V("a1"), V("a2")}, V("b"), {V("c1"), V("c2")}};
  o.require(tractor::change_scale(t, u).sigma == t.sigma, "change_scale moves sigma");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget;
    std::function<void(Outcome&, bool&)> run;
  };
  const Criterion criteria[] = {
      {"flat-model kernel is 7-dimensional with the printed generators", 30,
       [](Outcome& o, bool&) { flat_kernel(o); }},
      {"rational F: x + y is an exact solution", 5, [](Outcome& o, bool&) { rational_f(o); }},
      {"F(q) family: only (Q,Q) survives, with the printed coefficient", 10,
       [](Outcome& o, bool&) { fq_family(o); }},
      {"rolling distribution: lowest Rho component vanishes", 20, rolling},
      {"nonexample: (Q,Q) formula, trivial kernels, exp(+-q/sqrt(10)) rejected", 20,
       [](Outcome& o, bool&) { nonexample(o); }},
      {"g2 structure checks", 5, [](Outcome& o, bool&) { g2_structure(o); }},
      {"dual-path identities on random Monge frames", 60,
       [](Outcome& o, bool&) { dual_paths(o); }},
      {"representation, pairing, Leibniz and change of scale", 10,
       [](Outcome& o, bool&) { representation(o); }},
  };

  int failed = 0, n = 0;
  for (const auto& c : criteria) {
    ++n;
    Outcome o;
    bool probabilistic = false;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o, probabilistic);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget) {
      std::ostringstream s;
      s << "over budget (" << c.budget << " s)";
      o.require(false, s.str());
    }
    std::printf("[%s] %d. %s (%.2f s%s)%s%s\n", o.pass ? "PASS" : "FAIL", n, c.name, secs,
                probabilistic ? ", probabilistic" : "", o.pass ? "" : ": ",
                o.pass ? "" : o.note.str().c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%d/%d criteria passed\n", n - failed, n);
  return failed == 0 ? 0 : 1;
}
