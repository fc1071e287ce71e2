#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vmfkit {

// Base of all library errors so callers can catch vmfkit failures wholesale.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition violations (bad argument values, dimension mismatches).
struct domain_violation : error {
  using error::error;
};
struct dimension_mismatch : domain_violation {
  using domain_violation::domain_violation;
};
struct length_mismatch : domain_violation {
  using domain_violation::domain_violation;
};
struct not_unit_norm : domain_violation {
  using domain_violation::domain_violation;
};
struct empty_data : domain_violation {
  using domain_violation::domain_violation;
};

// Numerical failures surfaced by solvers and iterative schemes.
struct numerical_failure : error {
  using error::error;
};
struct denominator_singular : numerical_failure {
  using numerical_failure::numerical_failure;
};
struct step_size_underflow : numerical_failure {
  using numerical_failure::numerical_failure;
};
struct boundary_too_close : numerical_failure {
  using numerical_failure::numerical_failure;
};
struct not_converged : numerical_failure {
  using numerical_failure::numerical_failure;
};
struct non_positive_denominator : numerical_failure {
  using numerical_failure::numerical_failure;
};
struct out_of_range : error {
  using error::error;
};

// Persistence errors (I/O, schema versions).
struct io_failure : error {
  using error::error;
};
struct schema_error : io_failure {
  using io_failure::io_failure;
};

// Corpus ingestion errors.
struct empty_corpus : error {
  using error::error;
};
struct class_too_small : error {
  using error::error;
};

inline double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw dimension_mismatch("dot: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(std::span<const double> a) {
  double s = 0.0;
  for (double x : a) s += x * x;
  return std::sqrt(s);
}

inline std::vector<double> scaled(std::span<const double> a, double c) {
  std::vector<double> out(a.begin(), a.end());
  for (double& x : out) x *= c;
  return out;
}

inline std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw domain_violation("linspace: n must be >= 1");
  std::vector<double> out(static_cast<std::size_t>(n));
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + step * i;
  out.back() = hi;
  return out;
}

}  // namespace vmfkit
