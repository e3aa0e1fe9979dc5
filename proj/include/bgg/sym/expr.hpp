#pragma once

// Expression trees as produced by the parser and consumed by the printer.
// Arithmetic happens on RatExpr; Expr is the textual surface.

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bgg/sym/ratexpr.hpp"

namespace bgg::sym {

class Expr {
 public:
  enum class Kind { Number, Variable, Sqrt, Add, Sub, Mul, Div, Pow, Neg, Func, Function, Field };

  static Expr number(const mpq_class& q);
  static Expr variable(std::string name);
  static Expr sqrt(const mpz_class& n);
  static Expr binary(Kind k, Expr a, Expr b);
  static Expr power(Expr base, long exponent);
  static Expr neg(Expr a);
  static Expr func(Func f, Expr arg);
  static Expr function(std::string name, unsigned order, Expr arg);
  static Expr field(std::string name, std::vector<std::string> partials);

  Kind kind() const;
  const mpq_class& value() const;          // Number
  const mpz_class& radicand() const;       // Sqrt
  const std::string& name() const;         // Variable, Function, Field
  const Expr& lhs() const;                 // binary ops, Neg, Func, Function, Pow base
  const Expr& rhs() const;                 // binary ops
  long exponent() const;                   // Pow
  Func func_kind() const;                  // Func
  unsigned order() const;                  // Function
  const std::vector<std::string>& partials() const;  // Field

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

struct ParseOptions {
  std::vector<std::string> chart{"x", "y", "p", "q", "z"};
  std::vector<std::string> functions;  // opaque single-argument functions
  std::vector<std::string> fields;     // abstract functions of the chart
};

Expr parse(std::string_view text, const ParseOptions& opts = {});
std::string print(const Expr& e);

RatExpr to_ratexpr(const Expr& e);
Expr from_ratexpr(const RatExpr& r);
Expr normalize(const Expr& e);

// parse + to_ratexpr.
RatExpr parse_rat(std::string_view text, const ParseOptions& opts = {});

}  // namespace bgg::sym
