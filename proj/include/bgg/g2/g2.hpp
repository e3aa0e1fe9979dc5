#pragma once

// The 7x7 matrix model of g2 with its |3|-grading, trace-form pairings and
// the action on the standard representation V. V7 slots are ordered
// (chi, phi^1, phi^2, upsilon, tau_1, tau_2, sigma); epsilon^{12} =
// epsilon_{12} = 1.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bgg/sym/ratexpr.hpp"

namespace bgg::g2 {

using sym::RatExpr;
using Matrix7 = std::array<std::array<RatExpr, 7>, 7>;

struct Params {
  std::array<std::array<RatExpr, 2>, 2> a;  // g_0
  std::array<RatExpr, 2> x;                 // g_-1, column
  RatExpr r;                                // g_-2
  std::array<RatExpr, 2> y;                 // g_-3, row
  std::array<RatExpr, 2> z;                 // g_+1, row
  RatExpr s;                                // g_+2
  std::array<RatExpr, 2> w;                 // g_+3, column

  friend bool operator==(const Params&, const Params&) = default;
};

struct V7 {
  std::array<RatExpr, 7> v;

  const RatExpr& chi() const { return v[0]; }
  const RatExpr& phi(int i) const { return v[1 + i]; }
  const RatExpr& upsilon() const { return v[3]; }
  const RatExpr& tau(int i) const { return v[4 + i]; }
  const RatExpr& sigma() const { return v[6]; }
  static V7 make(RatExpr chi, std::array<RatExpr, 2> phi, RatExpr upsilon,
                 std::array<RatExpr, 2> tau, RatExpr sigma);

  friend V7 operator+(const V7& a, const V7& b);
  friend V7 operator-(const V7& a, const V7& b);
  friend bool operator==(const V7&, const V7&) = default;
};

// Adds `delta` to one matrix coefficient after realization (mutation tests).
struct Perturbation {
  int row = 0, col = 0;
  RatExpr delta = RatExpr(1);
};

// Realized matrix of the parameters, exactly as the block formula prints it.
Matrix7 realize(const Params& p, const std::optional<Perturbation>& perturb = std::nullopt);

// Reads parameters back from a matrix; throws ClosureFailure when the matrix
// is not the realization of its parameters.
Params parametrize(const Matrix7& m);

class G2Element {
 public:
  G2Element() : G2Element(Params{}) {}
  explicit G2Element(const Params& p) : p_(p), m_(realize(p)) {}
  // Throws ClosureFailure when m is not in the model.
  static G2Element from_matrix(const Matrix7& m);

  const Params& params() const { return p_; }
  const Matrix7& matrix() const { return m_; }

  friend bool operator==(const G2Element& a, const G2Element& b) { return a.p_ == b.p_; }

 private:
  Params p_;
  Matrix7 m_;
};

Matrix7 multiply(const Matrix7& a, const Matrix7& b);
Matrix7 commutator(const Matrix7& a, const Matrix7& b);

// Matrix commutator re-parametrized.
G2Element bracket(const G2Element& a, const G2Element& b);
G2Element operator+(const G2Element& a, const G2Element& b);
G2Element operator*(const RatExpr& c, const G2Element& a);

// Keeps only the g_a parameters, a in [-3, 3].
G2Element grade_project(const G2Element& m, int a);
// Block grade of matrix entry (i, j), or nullopt for the structurally zero
// corners.
std::optional<int> entry_grade(int i, int j);

// Trace form tr(m1 m2) / 6, which is K / 24 for the Killing form K.
RatExpr pairing(const G2Element& a, const G2Element& b);

V7 act_on_V(const G2Element& m, const V7& v);
V7 act_on_V(const Matrix7& m, const V7& v);
// The slot-wise action table, transcribed independently of the matrix.
V7 table_action(const Params& p, const V7& v);

// -sum phi_i . t_i, with the covectors given as elements of g_+.
V7 kostant_codiff(const std::vector<std::pair<G2Element, V7>>& pairs);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;
  bool all_pass() const;
};

struct VerifyOptions {
  std::optional<Perturbation> perturb;
  std::uint64_t seed = 0x6235;
  int random_trials = 6;
};

Report verify_structure(const VerifyOptions& opts = {});

}  // namespace bgg::g2
