#pragma once

namespace oltr {

// Bernoulli KL divergence D(p || q) with the usual 0·ln 0 = 0 convention.
double bernoulli_kl(double p, double q);

// Largest q >= p_hat with n * D(p_hat || q) <= budget, solved by bisection to
// absolute tolerance 1e-9. Closed forms at the endpoints: U(0) depends only
// on budget/n, and an empirical mean of 1 gives no room above, so U(1) = 1.
double kl_upper_bound(double p_hat, double n, double budget);

// Smallest q <= p_hat with n * D(p_hat || q) <= budget. L(0) = 0, and by the
// same convention as above L(1) = 1: an all-click history is treated as a
// degenerate estimate pinned to its mean rather than widened downward.
double kl_lower_bound(double p_hat, double n, double budget);

}  // namespace oltr
