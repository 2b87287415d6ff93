#include "declab/vec.hpp"

#include <cmath>

#include "declab/errors.hpp"

namespace declab {

namespace {

void require_same_length(const Vec& a, const Vec& b, const char* op) {
  if (a.size() != b.size())
    throw ConfigError(std::string(op) + ": length mismatch");
}

}  // namespace

Vec zeros(std::size_t n) { return Vec(n, 0.0); }

Vec add(const Vec& a, const Vec& b) {
  require_same_length(a, b, "add");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  require_same_length(a, b, "sub");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec scale(const Vec& a, double c) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

void axpy(double c, const Vec& x, Vec& y) {
  require_same_length(x, y, "axpy");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += c * x[i];
}

Vec hadamard_square(const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * a[i];
  return out;
}

Vec div_by_sqrt_plus_eps(const Vec& m, const Vec& v, double eps) {
  require_same_length(m, v, "div_by_sqrt_plus_eps");
  Vec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    out[i] = m[i] / (std::sqrt(v[i]) + eps);
  return out;
}

Vec mean_of(const std::vector<Vec>& xs) {
  if (xs.empty()) throw ConfigError("mean_of: empty set");
  Vec out(xs[0].size(), 0.0);
  for (const Vec& x : xs) {
    require_same_length(out, x, "mean_of");
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
  }
  const double inv = 1.0 / static_cast<double>(xs.size());
  for (double& e : out) e *= inv;
  return out;
}

double dot(const Vec& a, const Vec& b) {
  require_same_length(a, b, "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double sq_l2_norm(const Vec& a) { return dot(a, a); }

double l2_norm(const Vec& a) { return std::sqrt(sq_l2_norm(a)); }

double linf_norm(const Vec& a) {
  double s = 0.0;
  for (double e : a) s = std::max(s, std::fabs(e));
  return s;
}

bool all_finite(const Vec& a) {
  for (double e : a)
    if (!std::isfinite(e)) return false;
  return true;
}

}  // namespace declab
