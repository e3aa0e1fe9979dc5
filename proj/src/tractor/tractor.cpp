#include "bgg/tractor/tractor.hpp"

#include <algorithm>

#include "bgg/g2/g2.hpp"
#include "bgg/sym/errors.hpp"

namespace bgg::tractor {

namespace {

// L^{ab} and L_{ab} share the values of eps with eps^{12} = eps_{12} = 1.
long L(int a, int b) { return a == b ? 0 : (a == 0 ? 1 : -1); }

const RatExpr& half() {
  static const RatExpr h(mpq_class(1, 2));
  return h;
}

const RatExpr& quarter() {
  static const RatExpr h(mpq_class(1, 4));
  return h;
}

const char* slot_name(int i) {
  static const char* names[] = {"chi", "phi1", "phi2", "upsilon", "tau1", "tau2", "sigma"};
  return names[i];
}

std::array<Slot*, 7> slots(TractorSlots& t) {
  return {&t.chi, &t.phi[0], &t.phi[1], &t.upsilon, &t.tau[0], &t.tau[1], &t.sigma};
}

std::array<const Slot*, 7> slots(const TractorSlots& t) {
  return {&t.chi, &t.phi[0], &t.phi[1], &t.upsilon, &t.tau[0], &t.tau[1], &t.sigma};
}

Slot apply_field(const frame::VectorField& e, const Slot& s) {
  if (!s.known()) return Slot::unknown();
  return e.apply(s.value());
}

}  // namespace

// ------------------------------------------------------------------ Slot

const RatExpr& Slot::value() const {
  if (!v_) throw Error("tractor slot is unknown");
  return *v_;
}

Slot Slot::operator-() const { return v_ ? Slot(-*v_) : unknown(); }

Slot operator+(const Slot& a, const Slot& b) {
  if (!a.known() || !b.known()) return Slot::unknown();
  return a.value() + b.value();
}

Slot operator-(const Slot& a, const Slot& b) {
  if (!a.known() || !b.known()) return Slot::unknown();
  return a.value() - b.value();
}

Slot operator*(const Slot& a, const Slot& b) {
  if (!a.known() || !b.known()) return Slot::unknown();
  return a.value() * b.value();
}

std::string to_string(const Slot& s) { return s.known() ? to_string(s.value()) : "unknown"; }

// ------------------------------------------------------------ RhoSymbols

RhoSymbols RhoSymbols::abstract() {
  auto sym = [](const std::string& n) { return sym::field_symbol(n); };
  const char* ix[] = {"1", "2"};
  RhoSymbols r;
  r.ab = Sym2{sym("P_11"), sym("P_12"), sym("P_22")};
  for (int a = 0; a < 2; ++a) {
    r.a_dia[a] = sym(std::string("P_") + ix[a] + "d");
    r.dia_up[a] = sym(std::string("P_d^") + ix[a]);
    for (int b = 0; b < 2; ++b) {
      r.a_up[a][b] = sym(std::string("P_") + ix[a] + "^" + ix[b]);
      r.up_up[a][b] = sym(std::string("P^") + ix[a] + ix[b]);
    }
  }
  r.dia_dia = sym("P_dd");
  return r;
}

RhoSymbols RhoSymbols::with_lowest(const Frame235& f) {
  RhoSymbols r = abstract();
  r.ab = frame::rho_lowest(f, f.is_monge() ? frame::RhoPath::ClosedForm : frame::RhoPath::RhoT).p;
  return r;
}

// ---------------------------------------------------------- change_scale

TractorSlots change_scale(const TractorSlots& t, const Upsilon& u) {
  const Slot& s = t.sigma;
  const Slot& ups = t.upsilon;
  const Slot u2 = u.u2;
  std::array<Slot, 2> u1{u.u1[0], u.u1[1]}, u3{u.u3[0], u.u3[1]};

  // L^{ab} (U1)_a tau_b.
  Slot l_u1_tau;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) l_u1_tau = l_u1_tau + Slot(L(a, b)) * u1[a] * t.tau[b];
  Slot u1_u3 = u1[0] * u3[0] + u1[1] * u3[1];

  TractorSlots r;
  r.chi = t.chi - (t.phi[0] * u1[0] + t.phi[1] * u1[1]) - ups * u2 -
          (t.tau[0] * u3[0] + t.tau[1] * u3[1]) + Slot(4) * u2 * l_u1_tau +
          Slot(half()) * s * u2 * u2 - s * u1_u3;
  for (int a = 0; a < 2; ++a) {
    // L^{ba} (U1)_b and L^{ba} tau_b.
    Slot l_u1 = Slot(L(0, a)) * u1[0] + Slot(L(1, a)) * u1[1];
    Slot l_tau = Slot(L(0, a)) * t.tau[0] + Slot(L(1, a)) * t.tau[1];
    r.phi[a] = t.phi[a] - Slot(4) * ups * l_u1 - Slot(2) * u2 * l_tau +
               Slot(8) * l_u1_tau * l_u1 + s * u3[a] - Slot(2) * s * u2 * l_u1;
  }
  r.upsilon = ups - Slot(4) * l_u1_tau - s * u2;
  for (int a = 0; a < 2; ++a) r.tau[a] = t.tau[a] + s * u1[a];
  r.sigma = s;
  return r;
}

// ------------------------------------------------------------ l0_partial

TractorSlots l0_partial(const Frame235& f, const RatExpr& sigma) {
  frame::Mat2 h = frame::hessian(f, sigma);
  Sym2 p = RhoSymbols::with_lowest(f).ab;
  RatExpr ups;
  for (int g = 0; g < 2; ++g)
    for (int z = 0; z < 2; ++z)
      if (L(g, z) != 0) ups -= RatExpr(L(g, z)) * (h[g][z] - p.at(g, z) * sigma);
  TractorSlots t;
  t.chi = Slot::unknown();
  t.phi = {Slot::unknown(), Slot::unknown()};
  t.upsilon = ups;
  t.tau = {f.e(0).apply(sigma), f.e(1).apply(sigma)};
  t.sigma = sigma;
  return t;
}

// ----------------------------------------------------- Weyl derivatives

TractorSlots weyl_lower(const Frame235& f, const TractorSlots& t, int b) {
  const frame::VectorField& e = f.e(b);
  const frame::Connection& g = f.connection();
  TractorSlots r;
  r.chi = apply_field(e, t.chi);
  r.upsilon = apply_field(e, t.upsilon);
  r.sigma = apply_field(e, t.sigma);
  for (int a = 0; a < 2; ++a) {
    // nabla_b phi^a = e_b phi^a + Gamma^a_{b c} phi^c.
    r.phi[a] = apply_field(e, t.phi[a]);
    // nabla_b tau_a = e_b tau_a - Gamma^c_{b a} tau_c.
    r.tau[a] = apply_field(e, t.tau[a]);
    for (int c = 0; c < 2; ++c) {
      r.phi[a] = r.phi[a] + Slot(g(a, b, c)) * t.phi[c];
      r.tau[a] = r.tau[a] - Slot(g(c, b, a)) * t.tau[c];
    }
  }
  return r;
}

TractorSlots weyl_abstract(const TractorSlots& t, const Direction& dir) {
  std::string prefix = dir.kind == Direction::Kind::Diamond
                           ? "nabla_d"
                           : (dir.kind == Direction::Kind::Upper ? "nabla^" : "nabla_") +
                                 std::to_string(dir.index + 1);
  TractorSlots r;
  auto in = slots(t);
  auto out = slots(r);
  for (int i = 0; i < 7; ++i)
    *out[i] = in[i]->known() ? Slot(sym::field_symbol(prefix + "_" + slot_name(i)))
                             : Slot::unknown();
  return r;
}

// -------------------------------------------------------- tractor_deriv

TractorSlots tractor_deriv(const TractorSlots& t, const Direction& dir, const Frame235& f,
                           const RhoSymbols& rho, const SlotDerivative& weyl) {
  TractorSlots d;
  if (weyl)
    d = weyl(t);
  else if (dir.kind == Direction::Kind::Lower)
    d = weyl_lower(f, t, dir.index);
  else
    d = weyl_abstract(t, dir);

  const Slot& chi = t.chi;
  const Slot& ups = t.upsilon;
  const Slot& s = t.sigma;
  const auto& phi = t.phi;
  const auto& tau = t.tau;
  TractorSlots r;

  switch (dir.kind) {
    case Direction::Kind::Lower: {
      const int b = dir.index;
      r.chi = d.chi + Slot(rho.lower_dia(b)) * ups;
      for (int z = 0; z < 2; ++z)
        r.chi = r.chi + Slot(rho.lower(b, z)) * phi[z] + Slot(rho.mixed(b, z)) * tau[z];
      for (int a = 0; a < 2; ++a) {
        Slot acc = d.phi[a] + (a == b ? chi : Slot(0)) - s * Slot(rho.mixed(b, a));
        for (int g = 0; g < 2; ++g)
          acc = acc + Slot(4 * L(g, a)) * ups * Slot(rho.lower(b, g)) +
                Slot(2 * L(g, a)) * Slot(rho.lower_dia(b)) * tau[g];
        r.phi[a] = acc;
      }
      r.upsilon = d.upsilon + s * Slot(rho.lower_dia(b));
      for (int g = 0; g < 2; ++g) {
        r.upsilon = r.upsilon + Slot(half() * RatExpr(L(b, g))) * phi[g];
        for (int z = 0; z < 2; ++z)
          r.upsilon = r.upsilon + Slot(4 * L(g, z)) * Slot(rho.lower(b, g)) * tau[z];
      }
      for (int a = 0; a < 2; ++a)
        r.tau[a] = d.tau[a] + Slot(half() * RatExpr(L(b, a))) * ups - s * Slot(rho.lower(b, a));
      r.sigma = d.sigma - tau[b];
      break;
    }
    case Direction::Kind::Diamond: {
      r.chi = d.chi + Slot(rho.dia_dia) * ups;
      for (int g = 0; g < 2; ++g)
        r.chi = r.chi + Slot(rho.dia_lower(g)) * phi[g] + Slot(rho.dia_upper(g)) * tau[g];
      for (int a = 0; a < 2; ++a) {
        Slot acc = d.phi[a] - s * Slot(rho.dia_upper(a));
        for (int g = 0; g < 2; ++g)
          acc = acc + Slot(4 * L(g, a)) * ups * Slot(rho.dia_lower(g)) +
                Slot(2 * L(g, a)) * Slot(rho.dia_dia) * tau[g];
        r.phi[a] = acc;
      }
      r.upsilon = d.upsilon + chi + s * Slot(rho.dia_dia);
      for (int g = 0; g < 2; ++g)
        for (int z = 0; z < 2; ++z)
          r.upsilon = r.upsilon + Slot(4 * L(g, z)) * Slot(rho.dia_lower(g)) * tau[z];
      for (int a = 0; a < 2; ++a) {
        Slot acc = d.tau[a] - s * Slot(rho.dia_lower(a));
        for (int g = 0; g < 2; ++g) acc = acc - Slot(quarter() * RatExpr(L(g, a))) * phi[g];
        r.tau[a] = acc;
      }
      r.sigma = d.sigma + ups;
      break;
    }
    case Direction::Kind::Upper: {
      const int b = dir.index;
      r.chi = d.chi + Slot(rho.upper_dia(b)) * ups;
      for (int g = 0; g < 2; ++g)
        r.chi = r.chi + Slot(rho.mixed_up(b, g)) * phi[g] + Slot(rho.upper(b, g)) * tau[g];
      for (int a = 0; a < 2; ++a) {
        Slot acc = d.phi[a] - s * Slot(rho.upper(b, a));
        for (int g = 0; g < 2; ++g)
          acc = acc + Slot(4 * L(g, a)) * ups * Slot(rho.mixed_up(b, g)) +
                Slot(2 * L(g, a)) * Slot(rho.upper_dia(b)) * tau[g];
        r.phi[a] = acc;
      }
      r.upsilon = d.upsilon + s * Slot(rho.upper_dia(b));
      for (int g = 0; g < 2; ++g)
        for (int z = 0; z < 2; ++z)
          r.upsilon = r.upsilon + Slot(4 * L(g, z)) * Slot(rho.mixed_up(b, g)) * tau[z];
      for (int a = 0; a < 2; ++a)
        r.tau[a] = d.tau[a] + (a == b ? chi : Slot(0)) - s * Slot(rho.mixed_up(b, a));
      r.sigma = d.sigma - phi[b];
      break;
    }
  }
  return r;
}

// ------------------------------------------------------------- d* nabla

RatExpr diamond_sigma(const Frame235& f, const RatExpr& sigma) {
  frame::Mat2 h = frame::hessian(f, sigma);
  Sym2 p = RhoSymbols::with_lowest(f).ab;
  RatExpr out;
  for (int b = 0; b < 2; ++b)
    for (int g = 0; g < 2; ++g)
      if (L(b, g) != 0) out += RatExpr(L(b, g)) * (h[b][g] - p.at(b, g) * sigma);
  return out;
}

TractorSlots codiff_nabla(const TractorSlots& t, const Frame235& f, const RhoSymbols& rho,
                          const std::optional<RatExpr>& diamond) {
  std::array<TractorSlots, 2> lower{tractor_deriv(t, Direction::lower(0), f, rho),
                                    tractor_deriv(t, Direction::lower(1), f, rho)};
  SlotDerivative weyl_dia;
  if (diamond) {
    weyl_dia = [&](const TractorSlots& x) {
      TractorSlots d = weyl_abstract(x, Direction::diamond());
      d.sigma = *diamond;
      return d;
    };
  }
  TractorSlots dia = tractor_deriv(t, Direction::diamond(), f, rho, weyl_dia);

  TractorSlots r;
  r.chi = Slot::unknown();
  r.phi = {Slot::unknown(), Slot::unknown()};
  // -4 L^{bg} (nabla_b tau_g + 1/2 upsilon L_{bg} - P_{bg} sigma) - (nabla_dia sigma + upsilon):
  // the bracket is the tau-row of nabla^V_b, the last term the sigma-row of nabla^V_dia.
  Slot ups;
  for (int b = 0; b < 2; ++b)
    for (int g = 0; g < 2; ++g) ups = ups - Slot(4 * L(b, g)) * lower[b].tau[g];
  r.upsilon = ups - dia.sigma;
  for (int a = 0; a < 2; ++a) r.tau[a] = lower[a].sigma;
  r.sigma = 0;
  return r;
}

std::array<Slot, 2> kostant_tau_row(const TractorSlots& t, const Frame235& f,
                                    const RhoSymbols& rho) {
  // Unknown slots enter as placeholder symbols; an output that mentions one
  // of them is unknown.
  std::array<RatExpr, 7> placeholder;
  for (int i = 0; i < 7; ++i)
    placeholder[i] = sym::field_symbol(std::string("unknown_") + slot_name(i));
  auto to_v7 = [&](const TractorSlots& x) {
    g2::V7 v;
    auto in = slots(x);
    for (int i = 0; i < 7; ++i) v.v[i] = in[i]->known() ? in[i]->value() : placeholder[i];
    return v;
  };

  std::vector<std::pair<g2::G2Element, g2::V7>> pairs;
  for (int b = 0; b < 2; ++b) {
    g2::Params z;
    z.z[b] = RatExpr(1);
    pairs.emplace_back(g2::G2Element(z), to_v7(tractor_deriv(t, Direction::lower(b), f, rho)));
  }
  g2::V7 out = g2::kostant_codiff(pairs);

  std::array<Slot, 2> r;
  for (int a = 0; a < 2; ++a) {
    const RatExpr& e = out.tau(a);
    std::vector<sym::GenId> gens = e.gens();
    bool tainted = std::any_of(placeholder.begin(), placeholder.end(), [&](const RatExpr& p) {
      sym::GenId g = p.gens().front();
      return std::find(gens.begin(), gens.end(), g) != gens.end();
    });
    r[a] = tainted ? Slot::unknown() : Slot(e);
  }
  return r;
}

Sym2 theta0_via_tractor(const Frame235& f, const RatExpr& sigma) {
  TractorSlots l0 = l0_partial(f, sigma);
  RhoSymbols rho = RhoSymbols::with_lowest(f);
  frame::Mat2 m;
  for (int b = 0; b < 2; ++b) {
    TractorSlots d = tractor_deriv(l0, Direction::lower(b), f, rho);
    for (int a = 0; a < 2; ++a) m[b][a] = d.tau[a].value();
  }
  return Sym2::symmetrize(m);
}

}  // namespace bgg::tractor
