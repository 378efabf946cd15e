#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "corz/bigint.hpp"

namespace corz {

/// Quadratic character (a / ell) for an odd prime ell; 0 when ell | a.
int legendre(long a, int ell);

/// sum_{d | n} ((n/d) / ell) d^{(ell-3)/2}
BigCount sigma_twisted(long n, int ell);

/// (ell^2 - 1) / 24; throws std::domain_error for ell in {2, 3}.
long delta_ell(int ell);

/// Exact 1/alpha_ell through generalized Bernoulli numbers, cross-checked
/// against a truncated Dirichlet series. Throws std::runtime_error if the two
/// routes disagree by more than 1e-6.
BigCount inv_alpha(int ell);

/// 1/alpha_ell = +-ell * B_{k,chi} / (2k), k = (ell-1)/2, in exact rationals.
Rational inv_alpha_exact(int ell);

using Float50 = boost::multiprecision::cpp_bin_float_50;

struct DirichletEstimate {
  Float50 value;       // 1/alpha_ell from the partial sum
  Float50 tail_bound;  // bound on the omitted tail, scaled the same way
  long terms = 0;
};
/// Numerical 1/alpha_ell from sum_{m <= N} chi(m) m^{-k}. The tail is bounded
/// by partial summation, |sum_{m > N}| <= (ell-1) (N+1)^{-k}, and N is chosen
/// so the scaled bound is below `tail_tol`.
DirichletEstimate inv_alpha_numeric(int ell, double tail_tol = 1e-8);

/// Generalized Bernoulli number B_{k,chi} for chi = (. / ell).
Rational generalized_bernoulli(int k, int ell);
/// Bernoulli number B_k with B_1 = -1/2.
Rational bernoulli_number(int k);

struct EllParams {
  int ell = 5;
  long delta = 1;
  BigCount inv_alpha = 1;
  int exponent = 1;  // (ell - 3) / 2
};
/// Requires a prime ell >= 5.
EllParams make_ell_params(int ell);

/// 1 iff n is triangular.
int c2_closed(long n);
/// sum_{d | 3n+1} (d / 3)
long c3_closed(long n);

/// sigma_ell(n + delta_ell) / (1/alpha_ell), exact.
Rational core_main_term(long n, int ell);

/// c * (1/alpha_ell) * 5 > 2 n^{(ell-3)/2}, with c = count of ell-cores of n.
bool core_lower_bound_ok(long n, int ell, const BigCount& core_count);
bool core_lower_bound_ok(long n, int ell);

}  // namespace corz
