#pragma once

#include <cstddef>
#include <vector>

namespace declab {

// Dense parameter vector. Binary ops require equal lengths and throw
// ConfigError on mismatch.
using Vec = std::vector<double>;

Vec zeros(std::size_t n);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, double c);
void axpy(double c, const Vec& x, Vec& y);  // y += c * x
Vec hadamard_square(const Vec& a);          // a .* a
// m / (sqrt(v) + eps) elementwise, eps outside the square root.
Vec div_by_sqrt_plus_eps(const Vec& m, const Vec& v, double eps);
// Mean of a non-empty set of equal-length vectors; {v} returns v.
Vec mean_of(const std::vector<Vec>& xs);
double dot(const Vec& a, const Vec& b);
double sq_l2_norm(const Vec& a);
double l2_norm(const Vec& a);
double linf_norm(const Vec& a);
bool all_finite(const Vec& a);

}  // namespace declab
