#pragma once

// Global registry of polynomial generators. Every indeterminate that can
// appear in a normal form (chart variable, sqrt of a prime, transcendental
// atom, opaque function, abstract field) is interned here and addressed by a
// GenId. Square-root generators carry a tag bit so polynomial multiplication
// can reduce s_p^2 -> p without a registry lookup.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace bgg::sym {

using GenId = std::uint32_t;

inline constexpr GenId kSqrtTag = 0x80000000u;

inline bool is_sqrt_gen(GenId g) { return (g & kSqrtTag) != 0; }

enum class Func { Exp, Log, Sin, Cos, Tan, Sinh, Cosh };

std::string_view func_name(Func f);

class RatExpr;

enum class GenKind { Variable, SqrtPrime, Atom, Function, Field };

struct GeneratorInfo {
  GenKind kind = GenKind::Variable;
  std::string name;                     // variable, function or field name
  unsigned long prime = 0;              // SqrtPrime
  Func func = Func::Exp;                // Atom
  std::shared_ptr<const RatExpr> arg;   // Atom, Function
  unsigned order = 0;                   // Function: derivative order
  std::vector<GenId> partials;          // Field: sorted variable ids
  std::string key;                      // printed form, used for stable ordering
};

GenId variable(std::string_view name);
GenId sqrt_prime(unsigned long p);
// Atoms with arguments that fold (exp(0), log(1), ...) are handled by the
// caller; this always interns.
GenId atom(Func f, const RatExpr& arg);
GenId function(std::string_view name, unsigned order, const RatExpr& arg);
GenId field(std::string_view name, std::vector<GenId> partials);

const GeneratorInfo& info(GenId g);

// Total order on generators independent of interning history.
bool key_less(GenId a, GenId b);

// d g / d v as a normal form. Cached.
const RatExpr& derivative(GenId g, GenId v);

// True when g depends (possibly through an argument) on variable v.
bool depends_on(GenId g, GenId v);

}  // namespace bgg::sym
