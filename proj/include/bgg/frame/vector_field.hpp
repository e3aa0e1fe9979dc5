#pragma once

// Vector fields and 1-forms on a coordinate chart, with coefficients in the
// expression field.

#include <string>
#include <vector>

#include "bgg/sym/expr.hpp"
#include "bgg/sym/ratexpr.hpp"

namespace bgg::frame {

using sym::GenId;
using sym::RatExpr;

struct Chart {
  std::vector<std::string> names;
  std::vector<GenId> vars;

  static Chart of(const std::vector<std::string>& names);
  // (x, y, p, q, z).
  static Chart monge();

  std::size_t size() const { return vars.size(); }
  // Index of a variable, or size() when absent.
  std::size_t index(GenId v) const;
  sym::ParseOptions parse_options() const;

  friend bool operator==(const Chart& a, const Chart& b) { return a.vars == b.vars; }
};

class VectorField {
 public:
  VectorField() = default;
  VectorField(Chart chart, std::vector<RatExpr> coeffs);
  static VectorField zero(const Chart& chart);
  // The coordinate field d/dv.
  static VectorField coordinate(const Chart& chart, std::size_t i);

  const Chart& chart() const { return chart_; }
  const std::vector<RatExpr>& coeffs() const { return c_; }
  const RatExpr& operator[](std::size_t i) const { return c_[i]; }

  // Directional derivative v(f).
  RatExpr apply(const RatExpr& f) const;

  VectorField operator-() const;
  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend VectorField operator*(const RatExpr& f, const VectorField& v);

  bool is_zero() const;
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.c_ == b.c_; }

 private:
  Chart chart_;
  std::vector<RatExpr> c_;
};

// Lie bracket [u, v] = u(v^i) - v(u^i).
VectorField bracket(const VectorField& u, const VectorField& v);

// Applies a word of vector fields right to left: word {A, B} gives A(B(f)).
RatExpr apply_word(const std::vector<const VectorField*>& word, const RatExpr& f);

class OneForm {
 public:
  OneForm() = default;
  OneForm(Chart chart, std::vector<RatExpr> coeffs);

  const Chart& chart() const { return chart_; }
  const std::vector<RatExpr>& coeffs() const { return c_; }
  const RatExpr& operator[](std::size_t i) const { return c_[i]; }

  RatExpr operator()(const VectorField& v) const;

 private:
  Chart chart_;
  std::vector<RatExpr> c_;
};

// d(a)(u, v) = u(a(v)) - v(a(u)) - a([u, v]).
RatExpr exterior_derivative(const OneForm& a, const VectorField& u, const VectorField& v);

std::string to_string(const VectorField& v);
std::string to_string(const OneForm& a);

}  // namespace bgg::frame
