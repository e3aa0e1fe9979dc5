#pragma once

// Standard tractor sections in the splitting of a fixed scale, the change of
// splitting, the partial splitting operator L_0 and the tractor connection
// with abstract Rho components. Slots are (chi, phi^a, upsilon, tau_a, sigma)
// in the trivialization of the Frame235 scale, with L^{ab} = eps^{ab} and
// L_{ab} = eps_{ab}, eps^{12} = eps_{12} = 1.

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "bgg/frame/frame235.hpp"
#include "bgg/sym/ratexpr.hpp"

namespace bgg::tractor {

using frame::Frame235;
using frame::Sym2;
using sym::RatExpr;

// An expression, or the marker for a slot that cannot be computed from the
// available data. Arithmetic involving an unknown is unknown, including
// multiplication by zero.
class Slot {
 public:
  Slot() : v_(RatExpr(0)) {}
  Slot(RatExpr e) : v_(std::move(e)) {}  // NOLINT(google-explicit-constructor)
  Slot(long c) : v_(RatExpr(c)) {}       // NOLINT(google-explicit-constructor)
  static Slot unknown() {
    Slot s;
    s.v_.reset();
    return s;
  }

  bool known() const { return v_.has_value(); }
  // Throws Error on an unknown slot.
  const RatExpr& value() const;

  Slot operator-() const;
  friend Slot operator+(const Slot& a, const Slot& b);
  friend Slot operator-(const Slot& a, const Slot& b);
  friend Slot operator*(const Slot& a, const Slot& b);
  friend bool operator==(const Slot&, const Slot&) = default;

 private:
  std::optional<RatExpr> v_;
};

std::string to_string(const Slot& s);

// Sections built by this module keep sigma, tau and upsilon concrete;
// results of tractor_deriv can carry unknowns in any slot that reads one.
struct TractorSlots {
  Slot chi;
  std::array<Slot, 2> phi;
  Slot upsilon;
  std::array<Slot, 2> tau;
  Slot sigma;

  friend bool operator==(const TractorSlots&, const TractorSlots&) = default;
};

// Rho components with the symmetries P_{ab} = P_{ba}, P_{a dia} = P_{dia a},
// P_a^{b} = P^{b}_a, P_{dia}^{a} = P^{a}_{dia} built into the storage.
// Barred indices are already converted to unbarred ones.
struct RhoSymbols {
  Sym2 ab;                                     // P_{ab}
  std::array<RatExpr, 2> a_dia;                // P_{a dia}
  std::array<std::array<RatExpr, 2>, 2> a_up;  // a_up[a][b] = P_a^b
  RatExpr dia_dia;                             // P_{dia dia}
  std::array<RatExpr, 2> dia_up;               // P_dia^a
  std::array<std::array<RatExpr, 2>, 2> up_up; // P^{ab}

  const RatExpr& lower(int a, int b) const { return ab.at(a, b); }
  const RatExpr& lower_dia(int a) const { return a_dia[a]; }
  const RatExpr& dia_lower(int a) const { return a_dia[a]; }
  const RatExpr& mixed(int a, int b) const { return a_up[a][b]; }    // P_a^b
  const RatExpr& mixed_up(int b, int a) const { return a_up[a][b]; } // P^b_a
  const RatExpr& dia_upper(int a) const { return dia_up[a]; }        // P_dia^a
  const RatExpr& upper_dia(int a) const { return dia_up[a]; }        // P^a_dia
  const RatExpr& upper(int a, int b) const { return up_up[a][b]; }

  // Every component an abstract field symbol named P_....
  static RhoSymbols abstract();
  // Abstract, except P_{ab} from rho_lowest on the frame (closed form on
  // Monge frames, the rhoT path otherwise).
  static RhoSymbols with_lowest(const Frame235& f);
};

struct Upsilon {
  std::array<RatExpr, 2> u1;  // (Upsilon_1)_a
  RatExpr u2;
  std::array<RatExpr, 2> u3;  // (Upsilon_3)^a
};

// The change of splitting under s -> s exp(U1) exp(U2) exp(U3).
TractorSlots change_scale(const TractorSlots& t, const Upsilon& u);

// (unknown, unknown, -L^{gz}(nabla_g nabla_z s - P_{gz} s), nabla_a s, s).
TractorSlots l0_partial(const Frame235& f, const RatExpr& sigma);

struct Direction {
  enum class Kind { Lower, Diamond, Upper };
  Kind kind = Kind::Lower;
  int index = 0;  // beta for Lower and Upper

  static Direction lower(int b) { return {Kind::Lower, b}; }
  static Direction diamond() { return {Kind::Diamond, 0}; }
  static Direction upper(int b) { return {Kind::Upper, b}; }
};

// Slot-wise Weyl derivative of a section in one direction (without the Rho
// and algebraic terms of the tractor connection).
using SlotDerivative = std::function<TractorSlots(const TractorSlots&)>;

// nabla_b from the partial connection of the frame.
TractorSlots weyl_lower(const Frame235& f, const TractorSlots& t, int b);
// Abstract nabla_dia / nabla^b: each known slot maps to a fresh field symbol
// named after the direction and the slot.
TractorSlots weyl_abstract(const TractorSlots& t, const Direction& dir);

// The tractor connection nabla^V in the given direction. For Lower the Weyl
// derivative comes from the frame unless `weyl` is given; Diamond and Upper
// use abstract symbols unless `weyl` is given.
TractorSlots tractor_deriv(const TractorSlots& t, const Direction& dir, const Frame235& f,
                           const RhoSymbols& rho, const SlotDerivative& weyl = {});

// nabla_dia sigma = L^{bg}(nabla_b nabla_g sigma - P_{bg} sigma).
RatExpr diamond_sigma(const Frame235& f, const RatExpr& sigma);

// The printed rows of d* nabla^V: (unknown, unknown, upsilon-row, tau-row, 0).
// nabla_dia sigma is taken from `diamond` when given, else it is abstract.
TractorSlots codiff_nabla(const TractorSlots& t, const Frame235& f, const RhoSymbols& rho,
                          const std::optional<RatExpr>& diamond = std::nullopt);

// tau-row of d* nabla^V computed through the g2 action: -sum_b Z^b . nabla_b t
// with Z^b the g_+1 element dual to e_b.
std::array<Slot, 2> kostant_tau_row(const TractorSlots& t, const Frame235& f,
                                    const RhoSymbols& rho);

// Sym[nabla_b tau_a + 1/2 upsilon L_{ba} - sigma P_{ba}] on l0_partial(sigma).
Sym2 theta0_via_tractor(const Frame235& f, const RatExpr& sigma);

}  // namespace bgg::tractor
