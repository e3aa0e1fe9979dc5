#pragma once

// Adapted frames of (2,3,5) distributions and the Weyl-structure data of the
// scale theta = e1 ^ e2: Reeb field, partial connection, the 1-form alpha,
// the maps Psi_1 and Psi_2, the lowest Rho component and the first BGG
// operator Theta_0.
//
// Frame indices are 0-based in code: e(0), e(1) are the frame fields and
// conn(d, g, b) is the e_d coefficient of nabla_{e_g} e_b.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "bgg/frame/vector_field.hpp"
#include "bgg/sym/eval.hpp"
#include "bgg/sym/linear.hpp"

namespace bgg::frame {

using Mat2 = std::array<std::array<RatExpr, 2>, 2>;

struct Sym2 {
  RatExpr a11, a12, a22;

  const RatExpr& at(int i, int j) const;
  static Sym2 symmetrize(const Mat2& m);
  friend bool operator==(const Sym2&, const Sym2&) = default;
};

struct Connection {
  // g[d][c][b]: coefficient of e_d in nabla_{e_c} e_b.
  std::array<std::array<std::array<RatExpr, 2>, 2>, 2> g;

  const RatExpr& operator()(int d, int c, int b) const { return g[d][c][b]; }
  RatExpr& operator()(int d, int c, int b) { return g[d][c][b]; }
};

struct FrameOptions {
  std::uint64_t seed = 0x235235;
};

enum class Path { ClosedForm, General };

class Frame235 {
 public:
  // Q = d_q, X = d_x + p d_y + q d_p + F d_z on the chart (x, y, p, q, z).
  // Throws NotA235Distribution when F_qq vanishes identically.
  static Frame235 monge(const RatExpr& f, const FrameOptions& opts = {});
  // Throws DegenerateFrame when (e1, e2, [e1, e2]) is not a 3-plane or the
  // adapted 5-basis is singular under the guards.
  static Frame235 general(const Chart& chart, const VectorField& e1, const VectorField& e2,
                          std::vector<RatExpr> guards, const FrameOptions& opts = {});

  const Chart& chart() const;
  const VectorField& e(int i) const;
  const std::vector<RatExpr>& guards() const;
  bool is_monge() const;
  const RatExpr& monge_f() const;  // throws unless is_monge()

  // Derived data of the scale e1 ^ e2. On Monge frames these come from the
  // closed forms.
  const VectorField& reeb() const;
  const Connection& connection() const;

  // (e1, e2, R, [e1, R], [e2, R]).
  const std::array<VectorField, 5>& adapted_basis() const;
  // Coefficients of v in the adapted basis.
  std::array<RatExpr, 5> decompose(const VectorField& v) const;
  const OneForm& alpha() const;

  // The general-path Reeb field and connection, computed on demand even for
  // Monge frames.
  const VectorField& reeb_general() const;
  const Connection& connection_general() const;

  sym::ZeroVerdict is_zero(const RatExpr& e) const;
  sym::ZeroTestOptions zero_options() const;
  sym::SolveOptions solve_options() const;

 private:
  struct State;
  std::shared_ptr<State> s_;
};

VectorField reeb(const Frame235& f, Path path);
Connection partial_connection(const Frame235& f, Path path);
// Coefficients of the dual connection on the coframe dual to (e1, e2):
// nabla_{e_c} eta_b = dual(b, c, d) eta_d, i.e. minus the transpose.
Connection dual_connection(const Connection& conn);
OneForm alpha(const Frame235& f);

// Psi_1 and Psi_2 applied to an arbitrary section gamma of D, returned as
// vector fields (in D).
VectorField psi1(const Frame235& f, const VectorField& gamma);
VectorField psi2(const Frame235& f, const VectorField& gamma);

// m[i][d]: coefficient of e_d in Psi(e_i).
struct PsiMaps {
  Mat2 psi1, psi2;
};
PsiMaps psi_maps(const Frame235& f);

enum class RhoPath { ClosedForm, RhoT };

struct RhoResult {
  Sym2 p;
  // (P(e1)(e2) - P(e2)(e1)) / 2 before symmetrization; zero on the rhoT
  // path in exact arithmetic, always zero on the closed-form path.
  RatExpr antisymmetric;
};

RhoResult rho_lowest(const Frame235& f, RhoPath path);

// (nabla^2 sigma)_{ab} = e_a(e_b s) - Gamma^c_{ab} e_c s, unsymmetrized.
Mat2 hessian(const Frame235& f, const RatExpr& sigma);

// Theta_0(sigma) = Sym nabla^2 sigma - P sigma. The Rho component comes from
// the closed form on Monge frames and from the rhoT path otherwise.
Sym2 theta0(const Frame235& f, const RatExpr& sigma);

// Literal transcription of the Monge-normal-form components, with the
// symmetrized Hessian and the Rho part kept apart.
struct MongeTheta0 {
  Sym2 hessian;
  Sym2 rho;
  RatExpr sigma;
  Sym2 theta0() const;
};
MongeTheta0 monge_theta0_parts(const Frame235& f, const RatExpr& sigma);

enum class Verdict { Solution, NonSolution, ProbablySolution };
const char* to_string(Verdict v);

struct ScaleCheck {
  Verdict verdict;
  Sym2 theta;
  std::array<sym::ZeroVerdict, 3> zeros;  // (Q,Q), (Q,X), (X,X) order
};
ScaleCheck check_scale(const Frame235& f, const RatExpr& sigma);

// Basis of {sigma polynomial in the chart of total degree <= degree :
// Theta_0(sigma) = 0}, each with integer coefficients. Requires a Monge frame
// whose F involves at most one transcendental atom (NonRationalF otherwise).
std::vector<RatExpr> kernel_poly(const Frame235& f, int degree, std::size_t monomial_cap = 200000);

// Whether the polynomial v lies in the rational span of the polynomials in
// basis (exact rank comparison). Throws Error on non-polynomial input.
bool span_contains(const std::vector<RatExpr>& basis, const RatExpr& v);

// Monomials of total degree <= degree in the chart, lowest degree first.
std::vector<RatExpr> monomials_up_to(const Chart& chart, int degree);

// iota_7(sigma) = L^{ba} (e_b sigma) e_a + sigma R with L^{12} = 1.
VectorField iota7(const Frame235& f, const RatExpr& sigma);

}  // namespace bgg::frame
