#pragma once

#include <array>
#include <vector>

#include "bgg/frame/frame235.hpp"

namespace bgg::frame::detail {

// Q, X, [Q, X] and the recurring scalar combinations of the Monge normal
// form for a given F.
struct Monge {
  VectorField q, x, c;
  RatExpr f, fqq, fz;
  RatExpr rc;  // X Q^2 F / Q^2 F - F_z
  RatExpr rd;  // Q^3 F / Q^2 F
  RatExpr rg;  // (Q X^2 - 3 X [Q, X]) F / Q^2 F

  explicit Monge(const RatExpr& f);
  // Applies the word (leftmost acts last) to F.
  RatExpr word(std::initializer_list<const VectorField*> w) const;
};

VectorField monge_reeb(const Monge& m);
Connection monge_connection(const Monge& m);
Sym2 monge_rho(const Monge& m);

// Inverse of the matrix whose columns are the basis vectors.
struct Decomposer {
  std::vector<std::vector<RatExpr>> inv;
  std::array<RatExpr, 5> operator()(const VectorField& v) const;
};
Decomposer make_decomposer(const std::array<VectorField, 5>& basis, const sym::SolveOptions& o);

}  // namespace bgg::frame::detail
