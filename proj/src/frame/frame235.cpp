#include "bgg/frame/frame235.hpp"

#include <mutex>

#include "bgg/sym/errors.hpp"
#include "internal.hpp"

namespace bgg::frame {

using sym::Real;

const RatExpr& Sym2::at(int i, int j) const {
  if (i == 0 && j == 0) return a11;
  if (i == 1 && j == 1) return a22;
  return a12;
}

Sym2 Sym2::symmetrize(const Mat2& m) {
  return {m[0][0], RatExpr(mpq_class(1, 2)) * (m[0][1] + m[1][0]), m[1][1]};
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Solution: return "solution";
    case Verdict::NonSolution: return "non-solution";
    case Verdict::ProbablySolution: return "probably-solution";
  }
  return "?";
}

namespace detail {

std::array<RatExpr, 5> Decomposer::operator()(const VectorField& v) const {
  std::array<RatExpr, 5> c;
  for (std::size_t k = 0; k < 5; ++k) {
    RatExpr acc;
    for (std::size_t j = 0; j < inv[k].size(); ++j)
      if (!inv[k][j].is_zero() && !v[j].is_zero()) acc += inv[k][j] * v[j];
    c[k] = std::move(acc);
  }
  return c;
}

Decomposer make_decomposer(const std::array<VectorField, 5>& basis, const sym::SolveOptions& o) {
  const std::size_t n = basis[0].chart().size();
  if (n != 5) throw DegenerateFrame("a (2,3,5) frame needs a 5-dimensional chart");
  sym::Matrix a(n, sym::Vector(n)), id(n, sym::Vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) a[i][k] = basis[k][i];
    id[i][i] = RatExpr(1);
  }
  try {
    return Decomposer{sym::solve_linear(a, id, o)};
  } catch (const SingularMatrix& e) {
    throw DegenerateFrame("adapted basis (e1, e2, R, [e1,R], [e2,R]) is singular: " +
                          std::string(e.what()));
  }
}

}  // namespace detail

struct Frame235::State {
  Chart chart;
  std::array<VectorField, 2> e;
  std::vector<RatExpr> guards;
  std::optional<RatExpr> f;
  FrameOptions opts;

  VectorField r;
  Connection conn;

  std::once_flag general_once;
  VectorField r_general;
  Connection conn_general;

  std::once_flag adapted_once;
  std::array<VectorField, 5> basis;
  detail::Decomposer dec;
  OneForm alpha;

  sym::SolveOptions solve_options() const { return {guards, chart.vars, opts.seed}; }

  void compute_general() {
    std::call_once(general_once, [this] {
      VectorField r0 = bracket(e[0], e[1]);
      std::array<VectorField, 5> b0{e[0], e[1], r0, bracket(e[0], r0), bracket(e[1], r0)};
      detail::Decomposer d0 = detail::make_decomposer(b0, solve_options());
      // m[d][c][b]: [e_d, R0] coefficient of [e_c, [e_b, R0]].
      RatExpr m[2][2][2];
      for (int c = 0; c < 2; ++c)
        for (int b = 0; b < 2; ++b) {
          auto k = d0(bracket(e[c], b0[3 + b]));
          m[0][c][b] = k[3];
          m[1][c][b] = k[4];
        }
      // R = R0 + a e1 + b e2 with (a, b) fixed by the trace condition.
      RatExpr a = m[0][1][0] + m[1][1][1];
      RatExpr b = -(m[0][0][0] + m[1][0][1]);
      r_general = r0 + a * e[0] + b * e[1];
      std::array<VectorField, 5> basis_r{e[0], e[1], r_general, bracket(e[0], r_general),
                                         bracket(e[1], r_general)};
      detail::Decomposer dr = detail::make_decomposer(basis_r, solve_options());
      for (int c = 0; c < 2; ++c)
        for (int bb = 0; bb < 2; ++bb) {
          auto k = dr(bracket(e[c], basis_r[3 + bb]));
          conn_general(0, c, bb) = k[3];
          conn_general(1, c, bb) = k[4];
        }
      if (!f) {
        // The adapted basis for R is already inverted; reuse it.
        std::call_once(adapted_once, [&] { set_adapted(basis_r, std::move(dr)); });
      }
    });
  }

  void set_adapted(const std::array<VectorField, 5>& b, detail::Decomposer d) {
    basis = b;
    dec = std::move(d);
    alpha = OneForm(chart, dec.inv[2]);
  }

  void compute_adapted() {
    if (!f) compute_general();
    std::call_once(adapted_once, [this] {
      std::array<VectorField, 5> b{e[0], e[1], r, bracket(e[0], r), bracket(e[1], r)};
      set_adapted(b, detail::make_decomposer(b, solve_options()));
    });
  }
};

namespace {

// Numeric rank of the rows at one admissible sample point.
int numeric_rank(const std::vector<VectorField>& rows, const Frame235& f) {
  std::vector<RatExpr> flat;
  for (const auto& v : rows)
    for (const auto& c : v.coeffs()) flat.push_back(c);
  sym::PointSampler sampler(f.chart().vars, f.guards(), f.zero_options().seed);
  std::vector<Real> vals = sampler.sample(flat);
  const std::size_t n = f.chart().size();
  std::vector<std::vector<Real>> m(rows.size(), std::vector<Real>(n));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = vals[i * n + j];
  int rank = 0;
  const Real eps("1e-30");
  for (std::size_t c = 0; c < n && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t best = rank;
    for (std::size_t i = rank; i < rows.size(); ++i)
      if (abs(m[i][c]) > abs(m[best][c])) best = i;
    if (abs(m[best][c]) < eps) continue;
    std::swap(m[best], m[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      Real factor = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Frame235 Frame235::monge(const RatExpr& f, const FrameOptions& opts) {
  const Chart chart = Chart::monge();
  RatExpr fqq = sym::diff(f, chart.vars[3], 2);
  sym::ZeroTestOptions zo;
  zo.seed = opts.seed;
  zo.chart = chart.vars;
  if (fqq.is_zero() || sym::is_zero(fqq, {}, zo).zero)
    throw NotA235Distribution("F_qq vanishes identically, so D is not a (2,3,5) distribution");
  detail::Monge m(f);
  Frame235 fr;
  fr.s_ = std::make_shared<State>();
  State& s = *fr.s_;
  s.chart = chart;
  s.e = {m.q, m.x};
  s.guards = {m.fqq};
  s.f = f;
  s.opts = opts;
  s.r = detail::monge_reeb(m);
  s.conn = detail::monge_connection(m);
  return fr;
}

Frame235 Frame235::general(const Chart& chart, const VectorField& e1, const VectorField& e2,
                           std::vector<RatExpr> guards, const FrameOptions& opts) {
  if (chart.size() != 5) throw DegenerateFrame("a (2,3,5) frame needs a 5-dimensional chart");
  if (!(e1.chart() == chart) || !(e2.chart() == chart))
    throw DegenerateFrame("frame fields are not on the given chart");
  Frame235 fr;
  fr.s_ = std::make_shared<State>();
  State& s = *fr.s_;
  s.chart = chart;
  s.e = {e1, e2};
  s.guards = std::move(guards);
  s.opts = opts;
  if (numeric_rank({e1, e2}, fr) < 2) throw DegenerateFrame("e1 and e2 are linearly dependent");
  if (numeric_rank({e1, e2, bracket(e1, e2)}, fr) < 3)
    throw DegenerateFrame("[D, D] is not a 3-plane distribution");
  s.compute_general();
  s.r = s.r_general;
  s.conn = s.conn_general;
  return fr;
}

const Chart& Frame235::chart() const { return s_->chart; }
const VectorField& Frame235::e(int i) const { return s_->e.at(i); }
const std::vector<RatExpr>& Frame235::guards() const { return s_->guards; }
bool Frame235::is_monge() const { return s_->f.has_value(); }

const RatExpr& Frame235::monge_f() const {
  if (!s_->f) throw Error("frame is not in Monge normal form");
  return *s_->f;
}

const VectorField& Frame235::reeb() const { return s_->r; }
const Connection& Frame235::connection() const { return s_->conn; }

const std::array<VectorField, 5>& Frame235::adapted_basis() const {
  s_->compute_adapted();
  return s_->basis;
}

std::array<RatExpr, 5> Frame235::decompose(const VectorField& v) const {
  s_->compute_adapted();
  return s_->dec(v);
}

const OneForm& Frame235::alpha() const {
  s_->compute_adapted();
  return s_->alpha;
}

const VectorField& Frame235::reeb_general() const {
  s_->compute_general();
  return s_->r_general;
}

const Connection& Frame235::connection_general() const {
  s_->compute_general();
  return s_->conn_general;
}

sym::ZeroTestOptions Frame235::zero_options() const {
  sym::ZeroTestOptions o;
  o.seed = s_->opts.seed;
  o.chart = s_->chart.vars;
  return o;
}

sym::SolveOptions Frame235::solve_options() const { return s_->solve_options(); }

sym::ZeroVerdict Frame235::is_zero(const RatExpr& e) const {
  return sym::is_zero(e, s_->guards, zero_options());
}

// ------------------------------------------------------------- operations

VectorField reeb(const Frame235& f, Path path) {
  if (path == Path::General) return f.reeb_general();
  if (!f.is_monge()) throw Error("the closed-form path needs a Monge frame");
  return f.reeb();
}

Connection partial_connection(const Frame235& f, Path path) {
  if (path == Path::General) return f.connection_general();
  if (!f.is_monge()) throw Error("the closed-form path needs a Monge frame");
  return f.connection();
}

Connection dual_connection(const Connection& conn) {
  Connection d;
  for (int b = 0; b < 2; ++b)
    for (int c = 0; c < 2; ++c)
      for (int k = 0; k < 2; ++k) d(k, c, b) = -conn(b, c, k);
  return d;
}

OneForm alpha(const Frame235& f) { return f.alpha(); }

VectorField psi1(const Frame235& f, const VectorField& gamma) {
  const VectorField& r = f.reeb();
  auto k = f.decompose(RatExpr(mpq_class(1, 2)) * bracket(r, bracket(gamma, r)));
  return k[3] * f.e(0) + k[4] * f.e(1);
}

VectorField psi2(const Frame235& f, const VectorField& gamma) {
  const OneForm& a = f.alpha();
  VectorField gr = bracket(gamma, f.reeb());
  return a(bracket(f.e(1), gr)) * f.e(0) - a(bracket(f.e(0), gr)) * f.e(1);
}

PsiMaps psi_maps(const Frame235& f) {
  PsiMaps out;
  for (int i = 0; i < 2; ++i) {
    const VectorField& r = f.reeb();
    auto k = f.decompose(RatExpr(mpq_class(1, 2)) * bracket(r, bracket(f.e(i), r)));
    out.psi1[i] = {k[3], k[4]};
    const OneForm& a = f.alpha();
    VectorField gr = bracket(f.e(i), r);
    out.psi2[i] = {a(bracket(f.e(1), gr)), -a(bracket(f.e(0), gr))};
  }
  return out;
}

RhoResult rho_lowest(const Frame235& f, RhoPath path) {
  if (path == RhoPath::ClosedForm) {
    if (!f.is_monge()) throw Error("the closed-form path needs a Monge frame");
    return {detail::monge_rho(detail::Monge(f.monge_f())), RatExpr(0)};
  }
  PsiMaps psi = psi_maps(f);
  const OneForm& a = f.alpha();
  Mat2 p;
  for (int i = 0; i < 2; ++i) {
    VectorField u = (psi.psi1[i][0] - psi.psi2[i][0]) * f.e(0) +
                    (psi.psi1[i][1] - psi.psi2[i][1]) * f.e(1);
    for (int j = 0; j < 2; ++j)
      p[i][j] = RatExpr(mpq_class(1, 5)) * exterior_derivative(a, u, f.e(j));
  }
  return {Sym2::symmetrize(p), RatExpr(mpq_class(1, 2)) * (p[0][1] - p[1][0])};
}

Mat2 hessian(const Frame235& f, const RatExpr& sigma) {
  const Connection& g = f.connection();
  std::array<RatExpr, 2> d{f.e(0).apply(sigma), f.e(1).apply(sigma)};
  Mat2 h;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) h[a][b] = f.e(a).apply(d[b]) - g(0, a, b) * d[0] - g(1, a, b) * d[1];
  return h;
}

Sym2 theta0(const Frame235& f, const RatExpr& sigma) {
  Sym2 h = Sym2::symmetrize(hessian(f, sigma));
  Sym2 p = rho_lowest(f, f.is_monge() ? RhoPath::ClosedForm : RhoPath::RhoT).p;
  return {h.a11 - p.a11 * sigma, h.a12 - p.a12 * sigma, h.a22 - p.a22 * sigma};
}

ScaleCheck check_scale(const Frame235& f, const RatExpr& sigma) {
  ScaleCheck out;
  out.theta = theta0(f, sigma);
  const RatExpr* comps[3] = {&out.theta.a11, &out.theta.a12, &out.theta.a22};
  bool all = true, prob = false;
  for (int i = 0; i < 3; ++i) {
    out.zeros[i] = f.is_zero(*comps[i]);
    all = all && out.zeros[i].zero;
    prob = prob || out.zeros[i].probabilistic;
  }
  out.verdict = !all ? Verdict::NonSolution : prob ? Verdict::ProbablySolution : Verdict::Solution;
  return out;
}

VectorField iota7(const Frame235& f, const RatExpr& sigma) {
  return -f.e(1).apply(sigma) * f.e(0) + f.e(0).apply(sigma) * f.e(1) + sigma * f.reeb();
}

}  // namespace bgg::frame
