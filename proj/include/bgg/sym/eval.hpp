#pragma once

// Numeric evaluation and the one-sided zero test.

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "bgg/sym/ratexpr.hpp"

namespace bgg::sym {

// At least 200 bits of working precision (61 decimal digits).
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<61>>;

struct Point {
  std::map<GenId, mpq_class> coords;

  static Point make(const std::vector<GenId>& vars, const std::vector<mpq_class>& values);
};

using Number = std::variant<mpq_class, Real>;

Real to_real(const Number& n);
std::string to_string(const Number& n);

// Opaque functions and abstract fields cannot be evaluated: PoleAtPoint and
// DomainError are raised for singular points, Error for unassigned
// variables or opaque generators.
Number eval_at(const RatExpr& e, const Point& pt);

struct ZeroVerdict {
  bool zero = false;
  bool probabilistic = false;
  explicit operator bool() const { return zero; }
};

struct ZeroTestOptions {
  std::uint64_t seed = 0x235235;
  int samples = 16;
  // Chart variables to sample. Any variable of e outside this list is added.
  std::vector<GenId> chart;
};

// True when e normalizes to 0, or when |e| < 1e-40 at `samples` random
// points with coordinates in [1/8, 2] (resampled while some guard has
// magnitude below 1e-6 or while e has a pole). Opaque functions and fields
// take independent pseudo-random values per generator and point.
ZeroVerdict is_zero(const RatExpr& e, const std::vector<RatExpr>& guards = {},
                    const ZeroTestOptions& opts = {});

// Sampler shared by is_zero and callers that need a single generic point.
class PointSampler {
 public:
  PointSampler(std::vector<GenId> chart, std::vector<RatExpr> guards, std::uint64_t seed);
  // Evaluates e at the next accepted point (real mode). Opaque generators get
  // pseudo-random values. Throws after too many rejected points.
  Real sample(const RatExpr& e);
  // Same point for several expressions.
  std::vector<Real> sample(const std::vector<RatExpr>& es);

 private:
  struct Impl;
  std::vector<GenId> chart_;
  std::vector<RatExpr> guards_;
  std::uint64_t state_;
};

}  // namespace bgg::sym
