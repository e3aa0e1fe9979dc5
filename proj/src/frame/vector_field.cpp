#include "bgg/frame/vector_field.hpp"

#include <algorithm>

#include "bgg/sym/errors.hpp"

namespace bgg::frame {

Chart Chart::of(const std::vector<std::string>& names) {
  Chart c;
  c.names = names;
  for (const auto& n : names) {
    if (std::count(names.begin(), names.end(), n) > 1)
      throw Error("chart variable '" + n + "' is repeated");
    c.vars.push_back(sym::variable(n));
  }
  return c;
}

Chart Chart::monge() { return of({"x", "y", "p", "q", "z"}); }

std::size_t Chart::index(GenId v) const {
  return static_cast<std::size_t>(std::find(vars.begin(), vars.end(), v) - vars.begin());
}

sym::ParseOptions Chart::parse_options() const {
  sym::ParseOptions o;
  o.chart = names;
  return o;
}

VectorField::VectorField(Chart chart, std::vector<RatExpr> coeffs)
    : chart_(std::move(chart)), c_(std::move(coeffs)) {
  if (c_.size() != chart_.size()) throw Error("vector field: wrong number of coefficients");
}

VectorField VectorField::zero(const Chart& chart) {
  return VectorField(chart, std::vector<RatExpr>(chart.size()));
}

VectorField VectorField::coordinate(const Chart& chart, std::size_t i) {
  VectorField v = zero(chart);
  v.c_.at(i) = RatExpr(1);
  return v;
}

RatExpr VectorField::apply(const RatExpr& f) const {
  RatExpr acc;
  if (f.is_constant()) return acc;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    RatExpr d = sym::diff(f, chart_.vars[i]);
    if (!d.is_zero()) acc += c_[i] * d;
  }
  return acc;
}

VectorField VectorField::operator-() const {
  VectorField r = *this;
  for (auto& e : r.c_) e = -e;
  return r;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  VectorField r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_.at(i);
  return r;
}

VectorField operator-(const VectorField& a, const VectorField& b) { return a + (-b); }

VectorField operator*(const RatExpr& f, const VectorField& v) {
  VectorField r = v;
  for (auto& e : r.c_) e = f * e;
  return r;
}

bool VectorField::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const RatExpr& e) { return e.is_zero(); });
}

VectorField bracket(const VectorField& u, const VectorField& v) {
  std::vector<RatExpr> c(u.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = u.apply(v[i]) - v.apply(u[i]);
  return VectorField(u.chart(), std::move(c));
}

RatExpr apply_word(const std::vector<const VectorField*>& word, const RatExpr& f) {
  RatExpr r = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = (*it)->apply(r);
  return r;
}

OneForm::OneForm(Chart chart, std::vector<RatExpr> coeffs)
    : chart_(std::move(chart)), c_(std::move(coeffs)) {
  if (c_.size() != chart_.size()) throw Error("1-form: wrong number of coefficients");
}

RatExpr OneForm::operator()(const VectorField& v) const {
  RatExpr acc;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero() && !v[i].is_zero()) acc += c_[i] * v[i];
  return acc;
}

RatExpr exterior_derivative(const OneForm& a, const VectorField& u, const VectorField& v) {
  return u.apply(a(v)) - v.apply(a(u)) - a(bracket(u, v));
}

namespace {

std::string join(const Chart& chart, const std::vector<RatExpr>& c, const char* prefix) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + sym::to_string(c[i]) + ")*" + prefix + chart.names[i];
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string to_string(const VectorField& v) { return join(v.chart(), v.coeffs(), "d_"); }
std::string to_string(const OneForm& a) { return join(a.chart(), a.coeffs(), "d"); }

}  // namespace bgg::frame
