#include "bgg/g2/g2.hpp"

#include <functional>
#include <random>

#include "bgg/sym/errors.hpp"

namespace bgg::g2 {

namespace {

const RatExpr& sqrt2() {
  static const RatExpr s = RatExpr::sqrt_of(2);
  return s;
}

const RatExpr& inv_sqrt2() {
  static const RatExpr s = RatExpr::sqrt_of(mpq_class(1, 2));
  return s;
}

// J = [[0, -1], [1, 0]].
int jm(int i, int j) {
  if (i == 0 && j == 1) return -1;
  if (i == 1 && j == 0) return 1;
  return 0;
}

// epsilon with epsilon^{12} = epsilon_{12} = 1.
int eps(int a, int b) { return a == b ? 0 : (a == 0 ? 1 : -1); }

RatExpr trace(const std::array<std::array<RatExpr, 2>, 2>& a) { return a[0][0] + a[1][1]; }

// Block index of each row/column.
constexpr int kBlockOf[7] = {0, 1, 1, 2, 3, 3, 4};

}  // namespace

V7 V7::make(RatExpr chi, std::array<RatExpr, 2> phi, RatExpr upsilon, std::array<RatExpr, 2> tau,
            RatExpr sigma) {
  return V7{{std::move(chi), std::move(phi[0]), std::move(phi[1]), std::move(upsilon),
             std::move(tau[0]), std::move(tau[1]), std::move(sigma)}};
}

V7 operator+(const V7& a, const V7& b) {
  V7 r;
  for (int i = 0; i < 7; ++i) r.v[i] = a.v[i] + b.v[i];
  return r;
}

V7 operator-(const V7& a, const V7& b) {
  V7 r;
  for (int i = 0; i < 7; ++i) r.v[i] = a.v[i] - b.v[i];
  return r;
}

Matrix7 realize(const Params& p, const std::optional<Perturbation>& perturb) {
  Matrix7 m;
  const RatExpr t = trace(p.a);
  const RatExpr& s2 = sqrt2();
  const RatExpr& h = inv_sqrt2();

  m[0][0] = -t;
  m[0][3] = p.s;
  for (int j = 0; j < 2; ++j) {
    m[0][1 + j] = p.z[j];
    m[0][4 + j] = p.w[j];
  }
  for (int i = 0; i < 2; ++i) {
    m[1 + i][0] = p.x[i];
    for (int j = 0; j < 2; ++j) {
      m[1 + i][1 + j] = p.a[i][j] - (i == j ? t : RatExpr(0));
      m[1 + i][4 + j] = h * p.s * RatExpr(jm(i, j));
    }
    // sqrt(2) J Z^T.
    m[1 + i][3] = s2 * (i == 0 ? -p.z[1] : p.z[0]);
    m[1 + i][6] = -p.w[i];
  }
  m[3][0] = p.r;
  m[3][6] = p.s;
  for (int j = 0; j < 2; ++j) {
    // -sqrt(2) X^T J and -sqrt(2) Z J.
    m[3][1 + j] = -s2 * (j == 0 ? p.x[1] : -p.x[0]);
    m[3][4 + j] = -s2 * (j == 0 ? p.z[1] : -p.z[0]);
  }
  for (int i = 0; i < 2; ++i) {
    m[4 + i][0] = p.y[i];
    for (int j = 0; j < 2; ++j) {
      m[4 + i][1 + j] = -h * p.r * RatExpr(jm(i, j));
      m[4 + i][4 + j] = (i == j ? t : RatExpr(0)) - p.a[j][i];
    }
    // sqrt(2) J X.
    m[4 + i][3] = s2 * (i == 0 ? -p.x[1] : p.x[0]);
    m[4 + i][6] = -p.z[i];
  }
  m[6][3] = p.r;
  m[6][6] = t;
  for (int j = 0; j < 2; ++j) {
    m[6][1 + j] = -p.y[j];
    m[6][4 + j] = -p.x[j];
  }
  if (perturb) m.at(perturb->row).at(perturb->col) += perturb->delta;
  return m;
}

Params parametrize(const Matrix7& m) {
  Params p;
  RatExpr t = -m[0][0];
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) p.a[i][j] = m[1 + i][1 + j] + (i == j ? t : RatExpr(0));
    p.x[i] = m[1 + i][0];
    p.y[i] = m[4 + i][0];
    p.z[i] = m[0][1 + i];
    p.w[i] = m[0][4 + i];
  }
  p.r = m[3][0];
  p.s = m[0][3];
  Matrix7 back = realize(p);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (back[i][j] != m[i][j])
        throw ClosureFailure("matrix leaves the g2 model at entry (" + std::to_string(i) + ", " +
                             std::to_string(j) + ")");
  return p;
}

G2Element G2Element::from_matrix(const Matrix7& m) {
  G2Element e;
  e.p_ = parametrize(m);
  e.m_ = m;
  return e;
}

Matrix7 multiply(const Matrix7& a, const Matrix7& b) {
  Matrix7 c;
  for (int i = 0; i < 7; ++i)
    for (int k = 0; k < 7; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < 7; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Matrix7 commutator(const Matrix7& a, const Matrix7& b) {
  Matrix7 ab = multiply(a, b), ba = multiply(b, a);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) ab[i][j] -= ba[i][j];
  return ab;
}

G2Element bracket(const G2Element& a, const G2Element& b) {
  return G2Element::from_matrix(commutator(a.matrix(), b.matrix()));
}

G2Element operator+(const G2Element& a, const G2Element& b) {
  Params p = a.params();
  const Params& q = b.params();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) p.a[i][j] += q.a[i][j];
    p.x[i] += q.x[i];
    p.y[i] += q.y[i];
    p.z[i] += q.z[i];
    p.w[i] += q.w[i];
  }
  p.r += q.r;
  p.s += q.s;
  return G2Element(p);
}

G2Element operator*(const RatExpr& c, const G2Element& a) {
  Params p = a.params();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) p.a[i][j] *= c;
    p.x[i] *= c;
    p.y[i] *= c;
    p.z[i] *= c;
    p.w[i] *= c;
  }
  p.r *= c;
  p.s *= c;
  return G2Element(p);
}

G2Element grade_project(const G2Element& m, int a) {
  const Params& p = m.params();
  Params q;
  switch (a) {
    case -3: q.y = p.y; break;
    case -2: q.r = p.r; break;
    case -1: q.x = p.x; break;
    case 0: q.a = p.a; break;
    case 1: q.z = p.z; break;
    case 2: q.s = p.s; break;
    case 3: q.w = p.w; break;
    default: break;
  }
  return G2Element(q);
}

std::optional<int> entry_grade(int i, int j) {
  int bi = kBlockOf[i], bj = kBlockOf[j];
  if ((bi == 0 && bj == 4) || (bi == 4 && bj == 0) || (bi == 2 && bj == 2)) return std::nullopt;
  return bj - bi;
}

RatExpr pairing(const G2Element& a, const G2Element& b) {
  const Matrix7& x = a.matrix();
  const Matrix7& y = b.matrix();
  RatExpr tr;
  for (int i = 0; i < 7; ++i)
    for (int k = 0; k < 7; ++k)
      if (!x[i][k].is_zero() && !y[k][i].is_zero()) tr += x[i][k] * y[k][i];
  return RatExpr(mpq_class(1, 6)) * tr;
}

V7 act_on_V(const Matrix7& m, const V7& v) {
  V7 out;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (!m[i][j].is_zero() && !v.v[j].is_zero()) out.v[i] += m[i][j] * v.v[j];
  return out;
}

V7 act_on_V(const G2Element& m, const V7& v) { return act_on_V(m.matrix(), v); }

V7 table_action(const Params& p, const V7& v) {
  const RatExpr& s2 = sqrt2();
  const RatExpr& h = inv_sqrt2();
  const RatExpr t = trace(p.a);
  const RatExpr& chi = v.chi();
  const RatExpr& ups = v.upsilon();
  const RatExpr& sig = v.sigma();
  std::array<RatExpr, 2> phi{v.phi(0), v.phi(1)}, tau{v.tau(0), v.tau(1)};

  RatExpr o_chi, o_ups, o_sig;
  std::array<RatExpr, 2> o_phi, o_tau;

  // g_-3 (Y).
  for (int a = 0; a < 2; ++a) {
    o_sig -= p.y[a] * phi[a];
    o_tau[a] += chi * p.y[a];
  }
  // g_-2 (r).
  o_sig += p.r * ups;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) o_tau[a] -= h * p.r * RatExpr(eps(b, a)) * phi[b];
  o_ups += p.r * chi;
  // g_-1 (X).
  for (int a = 0; a < 2; ++a) {
    o_sig -= tau[a] * p.x[a];
    for (int b = 0; b < 2; ++b) {
      o_tau[a] += s2 * ups * RatExpr(eps(b, a)) * p.x[b];
      o_ups += s2 * RatExpr(eps(a, b)) * p.x[a] * phi[b];
    }
    o_phi[a] += chi * p.x[a];
  }
  // g_0 (A).
  o_sig += t * sig;
  for (int a = 0; a < 2; ++a) {
    o_tau[a] += t * tau[a];
    o_phi[a] -= t * phi[a];
    for (int b = 0; b < 2; ++b) {
      o_tau[a] -= tau[b] * p.a[b][a];
      o_phi[a] += p.a[a][b] * phi[b];
    }
  }
  o_chi -= t * chi;
  // g_+1 (Z).
  for (int a = 0; a < 2; ++a) {
    o_tau[a] -= sig * p.z[a];
    for (int b = 0; b < 2; ++b) {
      o_ups += s2 * RatExpr(eps(a, b)) * p.z[a] * tau[b];
      o_phi[a] += s2 * ups * RatExpr(eps(b, a)) * p.z[b];
    }
    o_chi += p.z[a] * phi[a];
  }
  // g_+2 (s).
  o_ups += p.s * sig;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) o_phi[a] += h * p.s * RatExpr(eps(b, a)) * tau[b];
  o_chi += p.s * ups;
  // g_+3 (W).
  for (int a = 0; a < 2; ++a) {
    o_phi[a] -= sig * p.w[a];
    o_chi += tau[a] * p.w[a];
  }
  return V7::make(o_chi, o_phi, o_ups, o_tau, o_sig);
}

V7 kostant_codiff(const std::vector<std::pair<G2Element, V7>>& pairs) {
  V7 acc;
  for (const auto& [phi, t] : pairs) acc = acc - act_on_V(phi, t);
  return acc;
}

// ------------------------------------------------------------ verification

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

RatExpr sym_var(const std::string& name) { return RatExpr::var(name); }

Params symbolic_params(const std::string& suffix) {
  Params p;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j)
      p.a[i][j] = sym_var("A" + std::to_string(i + 1) + std::to_string(j + 1) + suffix);
    p.x[i] = sym_var("X" + std::to_string(i + 1) + suffix);
    p.y[i] = sym_var("Y" + std::to_string(i + 1) + suffix);
    p.z[i] = sym_var("Z" + std::to_string(i + 1) + suffix);
    p.w[i] = sym_var("W" + std::to_string(i + 1) + suffix);
  }
  p.r = sym_var("R" + suffix);
  p.s = sym_var("S" + suffix);
  return p;
}

V7 symbolic_v7() {
  return V7::make(sym_var("CHI"), {sym_var("PHI1"), sym_var("PHI2")}, sym_var("UPS"),
                  {sym_var("TAU1"), sym_var("TAU2")}, sym_var("SIG"));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  RatExpr q() {
    std::uniform_int_distribution<int> n(-9, 9), d(1, 4);
    mpq_class v(n(g_), d(g_));
    v.canonicalize();
    return RatExpr(v);
  }
  Params params() {
    Params p;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) p.a[i][j] = q();
      p.x[i] = q();
      p.y[i] = q();
      p.z[i] = q();
      p.w[i] = q();
    }
    p.r = q();
    p.s = q();
    return p;
  }
  V7 v7() {
    V7 v;
    for (auto& e : v.v) e = q();
    return v;
  }

 private:
  std::mt19937_64 g_;
};

bool is_zero_matrix(const Matrix7& m) {
  for (const auto& row : m)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

void add(Report& rep, std::string name, const std::function<std::string()>& body) {
  Check c;
  c.name = std::move(name);
  try {
    c.detail = body();
    c.pass = c.detail.empty();
    if (c.pass) c.detail = "ok";
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = e.what();
  }
  rep.checks.push_back(std::move(c));
}

}  // namespace

Report verify_structure(const VerifyOptions& opts) {
  Report rep;
  Rng rng(opts.seed);
  auto realize_checked = [&](const Params& p) { return realize(p, opts.perturb); };

  add(rep, "closure", [&]() -> std::string {
    for (int k = 0; k < opts.random_trials; ++k) {
      Matrix7 c = commutator(realize_checked(rng.params()), realize_checked(rng.params()));
      parametrize(c);
    }
    return "";
  });

  add(rep, "grade_decomposition", [&]() -> std::string {
    G2Element m(symbolic_params(""));
    G2Element sum;
    for (int a = -3; a <= 3; ++a) {
      G2Element pa = grade_project(m, a);
      sum = sum + pa;
      for (int b = -3; b <= 3; ++b)
        if (b != a && !(grade_project(pa, b) == G2Element()))
          return "projections to g_" + std::to_string(a) + " and g_" + std::to_string(b) +
                 " overlap";
    }
    return sum == m ? "" : "projections do not sum to the element";
  });

  add(rep, "grading", [&]() -> std::string {
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b) {
        G2Element u = grade_project(G2Element(rng.params()), a);
        G2Element v = grade_project(G2Element(rng.params()), b);
        Matrix7 c = commutator(realize_checked(u.params()), realize_checked(v.params()));
        for (int i = 0; i < 7; ++i)
          for (int j = 0; j < 7; ++j) {
            if (c[i][j].is_zero()) continue;
            auto g = entry_grade(i, j);
            if (!g || *g != a + b)
              return "[g_" + std::to_string(a) + ", g_" + std::to_string(b) +
                     "] has a nonzero entry at (" + std::to_string(i) + ", " +
                     std::to_string(j) + ")";
          }
      }
    return "";
  });

  add(rep, "duality", [&]() -> std::string {
    Params p = symbolic_params(""), q = symbolic_params("p");
    G2Element m(p), n(q);
    auto pr = [&](int a, int b) { return pairing(grade_project(m, a), grade_project(n, b)); };
    const RatExpr third(mpq_class(1, 3)), half(mpq_class(1, 2));
    if (pr(-3, 3) != third * (p.y[0] * q.w[0] + p.y[1] * q.w[1])) return "(Y, W) pairing";
    if (pr(-2, 2) != half * p.r * q.s) return "(r, s) pairing";
    if (pr(-1, 1) != q.z[0] * p.x[0] + q.z[1] * p.x[1]) return "(X, Z) pairing";
    RatExpr trprod;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) trprod += p.a[i][j] * q.a[j][i];
    if (pr(0, 0) != third * (trprod + trace(p.a) * trace(q.a))) return "(A, A') pairing";
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b)
        if (a + b != 0 && !pr(a, b).is_zero())
          return "g_" + std::to_string(a) + " and g_" + std::to_string(b) + " pair nontrivially";
    return "";
  });

  add(rep, "levi_bracket", [&]() -> std::string {
    Params p = symbolic_params(""), q = symbolic_params("p");
    G2Element x = grade_project(G2Element(p), -1), xp = grade_project(G2Element(q), -1);
    G2Element rp = grade_project(G2Element(q), -2);
    const RatExpr& s2 = sqrt2();
    Params b1 = parametrize(commutator(realize_checked(x.params()), realize_checked(xp.params())));
    RatExpr want_r = 2 * s2 * (p.x[0] * q.x[1] - p.x[1] * q.x[0]);
    if (b1.r != want_r) return "g_-1 x g_-1 -> g_-2 coefficient is not 2 sqrt(2)";
    Params b2 = parametrize(commutator(realize_checked(x.params()), realize_checked(rp.params())));
    RatExpr c = RatExpr(3) / s2 * q.r;
    // Y_a = (3/sqrt 2) r' eps_{ba} X^b.
    for (int a = 0; a < 2; ++a) {
      RatExpr want;
      for (int b = 0; b < 2; ++b) want += c * RatExpr(eps(b, a)) * p.x[b];
      if (b2.y[a] != want) return "g_-1 x g_-2 -> g_-3 coefficient is not 3/sqrt(2)";
    }
    return "";
  });

  add(rep, "action_table", [&]() -> std::string {
    Params p = symbolic_params("");
    V7 v = symbolic_v7();
    for (int a = -3; a <= 3; ++a) {
      G2Element pa = grade_project(G2Element(p), a);
      V7 by_matrix = act_on_V(realize_checked(pa.params()), v);
      V7 by_table = table_action(pa.params(), v);
      for (int i = 0; i < 7; ++i)
        if (by_matrix.v[i] != by_table.v[i])
          return "g_" + std::to_string(a) + " action differs in slot " + std::to_string(i);
    }
    return "";
  });

  add(rep, "levi_normalization", []() -> std::string {
    // L^{ga} L_{gb} = delta^a_b with L^{ab} = eps^{ab}, L_{ab} = eps_{ab}.
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        int s = 0;
        for (int g = 0; g < 2; ++g) s += eps(g, a) * eps(g, b);
        if (s != (a == b ? 1 : 0)) return "contraction is not the identity";
      }
    return "";
  });

  add(rep, "jacobi", [&]() -> std::string {
    for (int k = 0; k < opts.random_trials; ++k) {
      Matrix7 a = realize_checked(rng.params()), b = realize_checked(rng.params()),
              c = realize_checked(rng.params());
      Matrix7 s = commutator(a, commutator(b, c));
      Matrix7 t = commutator(b, commutator(c, a));
      Matrix7 u = commutator(c, commutator(a, b));
      for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) s[i][j] += t[i][j] + u[i][j];
      if (!is_zero_matrix(s)) return "Jacobi identity fails";
    }
    return "";
  });

  add(rep, "representation", [&]() -> std::string {
    for (int k = 0; k < opts.random_trials; ++k) {
      Params p1 = rng.params(), p2 = rng.params();
      V7 v = rng.v7();
      V7 lhs = table_action(p1, table_action(p2, v)) - table_action(p2, table_action(p1, v));
      V7 rhs = table_action(parametrize(commutator(realize_checked(p1), realize_checked(p2))), v);
      if (!(lhs == rhs)) return "action table is not a representation";
    }
    return "";
  });

  add(rep, "pairing_invariance", [&]() -> std::string {
    for (int k = 0; k < opts.random_trials; ++k) {
      G2Element m(rng.params()), a(rng.params()), b(rng.params());
      if (!(pairing(bracket(m, a), b) + pairing(a, bracket(m, b))).is_zero())
        return "pairing is not ad-invariant";
    }
    return "";
  });

  return rep;
}

}  // namespace bgg::g2
