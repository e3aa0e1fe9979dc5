#include "bgg/sym/eval.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <unordered_map>

#include "bgg/sym/errors.hpp"

namespace bgg::sym {

Point Point::make(const std::vector<GenId>& vars, const std::vector<mpq_class>& values) {
  if (vars.size() != values.size()) throw Error("point: size mismatch");
  Point p;
  for (std::size_t i = 0; i < vars.size(); ++i) p.coords[vars[i]] = values[i];
  return p;
}

Real to_real(const Number& n) {
  if (const auto* q = std::get_if<mpq_class>(&n)) {
    return Real(q->get_num().get_str()) / Real(q->get_den().get_str());
  }
  return std::get<Real>(n);
}

std::string to_string(const Number& n) {
  if (const auto* q = std::get_if<mpq_class>(&n)) return q->get_str();
  return std::get<Real>(n).str(40, std::ios_base::scientific);
}

namespace {

Real real_of(const mpz_class& z) { return Real(z.get_str()); }
Real real_of(const mpq_class& q) { return real_of(q.get_num()) / real_of(q.get_den()); }

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Every generator reachable from e, including through atom arguments.
void collect(const RatExpr& e, std::set<GenId>& out) {
  for (GenId g : e.gens()) {
    if (!out.insert(g).second) continue;
    const GeneratorInfo& gi = info(g);
    if (gi.arg) collect(*gi.arg, out);
    if (gi.kind == GenKind::Field)
      for (GenId v : gi.partials) out.insert(v);
  }
}

bool has_kind(const std::set<GenId>& gs, GenKind k) {
  return std::any_of(gs.begin(), gs.end(), [k](GenId g) { return info(g).kind == k; });
}

class RealEval {
 public:
  RealEval(const std::map<GenId, Real>& vars, std::optional<std::uint64_t> opaque_seed)
      : vars_(vars), opaque_seed_(opaque_seed) {}

  Real rat(const RatExpr& e) {
    Real d = poly(e.den());
    if (abs(d) <= Real("1e-45")) throw PoleAtPoint("denominator vanishes at the point");
    return poly(e.num()) / d;
  }

  Real poly(const Poly& p) {
    Real acc = 0;
    for (const auto& t : p.terms()) {
      Real v = real_of(t.c);
      for (const auto& [g, e] : t.m.factors()) {
        const Real& x = gen(g);
        v *= e == 1 ? x : Real(pow(x, static_cast<int>(e)));
      }
      acc += v;
    }
    return acc;
  }

 private:
  const Real& gen(GenId g) {
    auto it = cache_.find(g);
    if (it != cache_.end()) return it->second;
    Real v = compute(g);
    return cache_.emplace(g, std::move(v)).first->second;
  }

  Real compute(GenId g) {
    const GeneratorInfo& gi = info(g);
    switch (gi.kind) {
      case GenKind::Variable: {
        auto it = vars_.find(g);
        if (it == vars_.end()) throw Error("variable '" + gi.name + "' is not assigned");
        return it->second;
      }
      case GenKind::SqrtPrime:
        return sqrt(Real(gi.prime));
      case GenKind::Atom: {
        Real a = rat(*gi.arg);
        switch (gi.func) {
          case Func::Exp: return exp(a);
          case Func::Log:
            if (a <= 0) throw DomainError("log of a nonpositive value");
            return log(a);
          case Func::Sin: return sin(a);
          case Func::Cos: return cos(a);
          case Func::Tan:
            if (abs(cos(a)) <= Real("1e-45")) throw PoleAtPoint("tan at a pole");
            return tan(a);
          case Func::Sinh: return sinh(a);
          case Func::Cosh: return cosh(a);
        }
        break;
      }
      case GenKind::Function:
      case GenKind::Field: {
        if (!opaque_seed_) throw Error("cannot evaluate opaque symbol '" + gi.key + "'");
        // Independent pseudo-random jet value in [1/2, 2].
        std::uint64_t h;
        if (gi.arg) {
          // Keyed by the argument's value so equal arguments written
          // differently agree.
          Real a = rat(*gi.arg);
          h = splitmix(std::hash<std::string>{}(gi.name + std::to_string(gi.order)) ^
                       *opaque_seed_);
          h = splitmix(h ^ std::hash<std::string>{}(a.str(20, std::ios_base::scientific)));
        } else {
          h = splitmix(std::hash<std::string>{}(gi.key) ^ *opaque_seed_);
        }
        return Real(1) / 2 + Real(h % 1000003) * 3 / (2 * Real(1000003));
      }
    }
    return Real(0);
  }

  const std::map<GenId, Real>& vars_;
  std::optional<std::uint64_t> opaque_seed_;
  std::unordered_map<GenId, Real> cache_;
};

mpq_class exact_poly(const Poly& p, const Point& pt) {
  mpq_class acc = 0;
  for (const auto& t : p.terms()) {
    mpq_class v(t.c);
    for (const auto& [g, e] : t.m.factors()) {
      auto it = pt.coords.find(g);
      if (it == pt.coords.end()) throw Error("variable '" + info(g).name + "' is not assigned");
      mpz_class n, d;
      mpz_pow_ui(n.get_mpz_t(), it->second.get_num().get_mpz_t(), e);
      mpz_pow_ui(d.get_mpz_t(), it->second.get_den().get_mpz_t(), e);
      v *= mpq_class(n, d);
    }
    acc += v;
  }
  acc.canonicalize();
  return acc;
}

}  // namespace

Number eval_at(const RatExpr& e, const Point& pt) {
  std::set<GenId> gs;
  collect(e, gs);
  bool rational = std::all_of(gs.begin(), gs.end(),
                              [](GenId g) { return info(g).kind == GenKind::Variable; });
  if (rational) {
    mpq_class d = exact_poly(e.den(), pt);
    if (d == 0) throw PoleAtPoint("denominator vanishes at the point");
    mpq_class r = exact_poly(e.num(), pt) / d;
    r.canonicalize();
    return r;
  }
  std::map<GenId, Real> vars;
  for (const auto& [g, q] : pt.coords) vars[g] = real_of(q);
  RealEval ev(vars, std::nullopt);
  return ev.rat(e);
}

// ---------------------------------------------------------------- sampler

PointSampler::PointSampler(std::vector<GenId> chart, std::vector<RatExpr> guards,
                           std::uint64_t seed)
    : chart_(std::move(chart)), guards_(std::move(guards)), state_(seed) {}

std::vector<Real> PointSampler::sample(const std::vector<RatExpr>& es) {
  std::set<GenId> gs(chart_.begin(), chart_.end());
  for (const auto& e : es) collect(e, gs);
  for (const auto& g : guards_) collect(g, gs);
  std::vector<GenId> vars;
  for (GenId g : gs)
    if (info(g).kind == GenKind::Variable) vars.push_back(g);
  std::sort(vars.begin(), vars.end(), key_less);

  for (int attempt = 0; attempt < 1000; ++attempt) {
    state_ = splitmix(state_);
    std::mt19937_64 rng(state_);
    std::uniform_int_distribution<int> dist(512, 8192);
    std::map<GenId, Real> coords;
    for (GenId v : vars) coords[v] = Real(dist(rng)) / 4096;
    RealEval ev(coords, state_);
    try {
      bool ok = true;
      for (const auto& g : guards_) {
        if (abs(ev.rat(g)) < Real("1e-6")) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::vector<Real> out;
      out.reserve(es.size());
      for (const auto& e : es) out.push_back(ev.rat(e));
      return out;
    } catch (const PoleAtPoint&) {
      continue;
    } catch (const DomainError&) {
      continue;
    }
  }
  throw Error("no admissible sample point found (guards or poles everywhere)");
}

Real PointSampler::sample(const RatExpr& e) { return sample(std::vector<RatExpr>{e}).front(); }

ZeroVerdict is_zero(const RatExpr& e, const std::vector<RatExpr>& guards,
                    const ZeroTestOptions& opts) {
  if (e.is_zero()) return {true, false};
  std::set<GenId> gs;
  collect(e, gs);
  // Without transcendental atoms the generators are algebraically
  // independent (sqrt symbols are linearly independent over Q and opaque
  // jets are free), so a nonzero normal form is certainly nonzero.
  if (!has_kind(gs, GenKind::Atom)) return {false, false};
  PointSampler sampler(opts.chart, guards, opts.seed);
  const Real threshold("1e-40");
  for (int i = 0; i < opts.samples; ++i)
    if (abs(sampler.sample(e)) >= threshold) return {false, false};
  return {true, true};
}

}  // namespace bgg::sym
