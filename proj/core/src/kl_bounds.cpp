#include "oltrlab/kl_bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace oltr {

namespace {

constexpr double kTol = 1e-9;
constexpr int kMaxIter = 100;

void check_args(double p_hat, double n, double budget) {
  if (!(p_hat >= 0.0 && p_hat <= 1.0))
    throw std::invalid_argument("empirical mean outside [0,1]");
  if (!(n > 0.0)) throw std::invalid_argument("sample count must be positive");
  if (!(budget >= 0.0)) throw std::invalid_argument("negative KL budget");
}

}  // namespace

double bernoulli_kl(double p, double q) {
  auto term = [](double a, double b) {
    return a == 0.0 ? 0.0 : a * std::log(a / b);
  };
  return term(p, q) + term(1.0 - p, 1.0 - q);
}

double kl_upper_bound(double p_hat, double n, double budget) {
  check_args(p_hat, n, budget);
  if (p_hat >= 1.0) return 1.0;
  if (p_hat <= 0.0) return 1.0 - std::exp(-budget / n);
  double lo = p_hat, hi = 1.0;
  for (int i = 0; i < kMaxIter && hi - lo > kTol; ++i) {
    double mid = 0.5 * (lo + hi);
    (n * bernoulli_kl(p_hat, mid) <= budget ? lo : hi) = mid;
  }
  return lo;
}

double kl_lower_bound(double p_hat, double n, double budget) {
  check_args(p_hat, n, budget);
  if (p_hat <= 0.0) return 0.0;
  if (p_hat >= 1.0) return 1.0;
  double lo = 0.0, hi = p_hat;
  for (int i = 0; i < kMaxIter && hi - lo > kTol; ++i) {
    double mid = 0.5 * (lo + hi);
    (n * bernoulli_kl(p_hat, mid) <= budget ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace oltr
