#include "bgg/sym/generators.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "bgg/sym/ratexpr.hpp"

namespace bgg::sym {

std::string_view func_name(Func f) {
  switch (f) {
    case Func::Exp: return "exp";
    case Func::Log: return "log";
    case Func::Sin: return "sin";
    case Func::Cos: return "cos";
    case Func::Tan: return "tan";
    case Func::Sinh: return "sinh";
    case Func::Cosh: return "cosh";
  }
  return "?";
}

namespace {

struct Registry {
  std::shared_mutex mu;
  std::vector<std::unique_ptr<GeneratorInfo>> regular;
  std::vector<std::unique_ptr<GeneratorInfo>> sqrts;
  std::unordered_map<std::string, GenId> by_key;

  std::mutex deriv_mu;
  std::unordered_map<std::uint64_t, std::unique_ptr<RatExpr>> deriv;
};

Registry& registry() {
  static Registry r;
  return r;
}

char kind_tag(GenKind k) {
  switch (k) {
    case GenKind::Variable: return 'v';
    case GenKind::SqrtPrime: return 's';
    case GenKind::Atom: return 'a';
    case GenKind::Function: return 'f';
    case GenKind::Field: return 'F';
  }
  return '?';
}

int kind_rank(GenKind k) {
  switch (k) {
    case GenKind::Variable: return 0;
    case GenKind::Field: return 1;
    case GenKind::Function: return 2;
    case GenKind::Atom: return 3;
    case GenKind::SqrtPrime: return 4;
  }
  return 5;
}

GenId intern(GeneratorInfo gi) {
  Registry& r = registry();
  std::string lookup = std::string(1, kind_tag(gi.kind)) + ":" + gi.key;
  {
    std::shared_lock lock(r.mu);
    auto it = r.by_key.find(lookup);
    if (it != r.by_key.end()) return it->second;
  }
  std::unique_lock lock(r.mu);
  auto it = r.by_key.find(lookup);
  if (it != r.by_key.end()) return it->second;
  GenId id;
  if (gi.kind == GenKind::SqrtPrime) {
    id = kSqrtTag | static_cast<GenId>(r.sqrts.size());
    r.sqrts.push_back(std::make_unique<GeneratorInfo>(std::move(gi)));
  } else {
    id = static_cast<GenId>(r.regular.size());
    r.regular.push_back(std::make_unique<GeneratorInfo>(std::move(gi)));
  }
  r.by_key.emplace(std::move(lookup), id);
  return id;
}

}  // namespace

GenId variable(std::string_view name) {
  GeneratorInfo gi;
  gi.kind = GenKind::Variable;
  gi.name = std::string(name);
  gi.key = gi.name;
  return intern(std::move(gi));
}

GenId sqrt_prime(unsigned long p) {
  GeneratorInfo gi;
  gi.kind = GenKind::SqrtPrime;
  gi.prime = p;
  gi.key = "sqrt(" + std::to_string(p) + ")";
  return intern(std::move(gi));
}

GenId atom(Func f, const RatExpr& arg) {
  GeneratorInfo gi;
  gi.kind = GenKind::Atom;
  gi.func = f;
  gi.arg = std::make_shared<const RatExpr>(arg);
  gi.key = std::string(func_name(f)) + "(" + to_string(arg) + ")";
  return intern(std::move(gi));
}

GenId function(std::string_view name, unsigned order, const RatExpr& arg) {
  GeneratorInfo gi;
  gi.kind = GenKind::Function;
  gi.name = std::string(name);
  gi.order = order;
  gi.arg = std::make_shared<const RatExpr>(arg);
  gi.key = gi.name + std::string(order, '\'') + "(" + to_string(arg) + ")";
  return intern(std::move(gi));
}

GenId field(std::string_view name, std::vector<GenId> partials) {
  std::sort(partials.begin(), partials.end(), key_less);
  GeneratorInfo gi;
  gi.kind = GenKind::Field;
  gi.name = std::string(name);
  gi.key = gi.name;
  for (GenId v : partials) gi.key += "_" + info(v).name;
  gi.partials = std::move(partials);
  return intern(std::move(gi));
}

const GeneratorInfo& info(GenId g) {
  Registry& r = registry();
  std::shared_lock lock(r.mu);
  if (is_sqrt_gen(g)) return *r.sqrts.at(g & ~kSqrtTag);
  return *r.regular.at(g);
}

bool key_less(GenId a, GenId b) {
  if (a == b) return false;
  const GeneratorInfo& x = info(a);
  const GeneratorInfo& y = info(b);
  int rx = kind_rank(x.kind), ry = kind_rank(y.kind);
  if (rx != ry) return rx < ry;
  if (x.kind == GenKind::SqrtPrime) return x.prime < y.prime;
  return x.key < y.key;
}

namespace {

RatExpr compute_derivative(GenId g, GenId v) {
  const GeneratorInfo& gi = info(g);
  switch (gi.kind) {
    case GenKind::Variable:
      return g == v ? RatExpr(1) : RatExpr(0);
    case GenKind::SqrtPrime:
      return RatExpr(0);
    case GenKind::Field: {
      std::vector<GenId> p = gi.partials;
      p.push_back(v);
      return RatExpr::gen(field(gi.name, std::move(p)));
    }
    case GenKind::Function: {
      RatExpr du = diff(*gi.arg, v);
      if (du.is_zero()) return RatExpr(0);
      return apply_function(gi.name, gi.order + 1, *gi.arg) * du;
    }
    case GenKind::Atom: {
      const RatExpr& u = *gi.arg;
      RatExpr du = diff(u, v);
      if (du.is_zero()) return RatExpr(0);
      RatExpr self = RatExpr::gen(g);
      switch (gi.func) {
        case Func::Exp: return self * du;
        case Func::Log: return du / u;
        case Func::Sin: return apply(Func::Cos, u) * du;
        case Func::Cos: return -apply(Func::Sin, u) * du;
        case Func::Tan: return (RatExpr(1) + self * self) * du;
        case Func::Sinh: return apply(Func::Cosh, u) * du;
        case Func::Cosh: return apply(Func::Sinh, u) * du;
      }
    }
  }
  return RatExpr(0);
}

}  // namespace

const RatExpr& derivative(GenId g, GenId v) {
  Registry& r = registry();
  std::uint64_t k = (static_cast<std::uint64_t>(g) << 32) | v;
  {
    std::lock_guard lock(r.deriv_mu);
    auto it = r.deriv.find(k);
    if (it != r.deriv.end()) return *it->second;
  }
  auto value = std::make_unique<RatExpr>(compute_derivative(g, v));
  std::lock_guard lock(r.deriv_mu);
  auto [it, inserted] = r.deriv.emplace(k, std::move(value));
  return *it->second;
}

bool depends_on(GenId g, GenId v) {
  if (is_sqrt_gen(g)) return false;
  return !derivative(g, v).is_zero();
}

}  // namespace bgg::sym
