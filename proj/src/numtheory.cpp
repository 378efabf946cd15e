#include "corz/numtheory.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "corz/abacus.hpp"

namespace corz {

namespace {

void require_odd_prime(int ell, const char* who) {
  if (ell < 3 || !is_prime(ell)) throw std::invalid_argument(std::string(who) + ": ell must be an odd prime");
}

void require_prime_ge5(int ell, const char* who) {
  if (ell < 5 || !is_prime(ell)) throw std::invalid_argument(std::string(who) + ": ell must be a prime >= 5");
}

long modpow(long base, long exp, long mod) {
  long result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

BigCount binomial(unsigned long n, unsigned long k) {
  BigCount r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

int legendre(long a, int ell) {
  require_odd_prime(ell, "legendre");
  long r = a % ell;
  if (r < 0) r += ell;
  if (r == 0) return 0;
  return modpow(r, (ell - 1) / 2, ell) == 1 ? 1 : -1;
}

BigCount sigma_twisted(long n, int ell) {
  if (n < 1) throw std::invalid_argument("sigma_twisted: n must be positive");
  require_prime_ge5(ell, "sigma_twisted");
  const unsigned long e = static_cast<unsigned long>((ell - 3) / 2);
  BigCount sum = 0;
  auto add = [&](long d) {
    const int chi = legendre(n / d, ell);
    if (chi > 0)
      sum += pow_int(d, e);
    else if (chi < 0)
      sum -= pow_int(d, e);
  };
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    add(d);
    if (d != n / d) add(n / d);
  }
  return sum;
}

long delta_ell(int ell) {
  if (ell == 2 || ell == 3) throw std::domain_error("delta_ell not integral for ell in {2, 3}");
  require_prime_ge5(ell, "delta_ell");
  return (static_cast<long>(ell) * ell - 1) / 24;
}

Rational bernoulli_number(int k) {
  if (k < 0) throw std::invalid_argument("bernoulli_number: negative index");
  std::vector<Rational> b(static_cast<std::size_t>(k) + 1);
  b[0] = 1;
  for (int m = 1; m <= k; ++m) {
    Rational acc = 0;
    for (int j = 0; j < m; ++j)
      acc += Rational(binomial(static_cast<unsigned long>(m + 1), static_cast<unsigned long>(j))) *
             b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(m)] = -acc / (m + 1);
    b[static_cast<std::size_t>(m)].canonicalize();
  }
  return b.back();
}

Rational generalized_bernoulli(int k, int ell) {
  require_odd_prime(ell, "generalized_bernoulli");
  if (k < 0) throw std::invalid_argument("generalized_bernoulli: negative index");
  std::vector<Rational> bern;
  for (int j = 0; j <= k; ++j) bern.push_back(bernoulli_number(j));

  // B_{k,chi} = ell^{k-1} sum_{a=1}^{ell} chi(a) B_k(a/ell)
  Rational sum = 0;
  for (int a = 1; a <= ell; ++a) {
    const int chi = legendre(a, ell);
    if (chi == 0) continue;
    const Rational x(a, ell);
    Rational bk = 0, xpow = 1;  // B_k(x) = sum_j C(k,j) B_j x^{k-j}, built from j = k down
    for (int j = k; j >= 0; --j) {
      bk += Rational(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j))) *
            bern[static_cast<std::size_t>(j)] * xpow;
      xpow *= x;
    }
    sum += chi * bk;
  }
  Rational out = sum;
  if (k >= 1)
    out *= Rational(pow_int(ell, static_cast<unsigned long>(k - 1)));
  else
    out /= ell;
  out.canonicalize();
  return out;
}

Rational inv_alpha_exact(int ell) {
  require_prime_ge5(ell, "inv_alpha");
  const int k = (ell - 1) / 2;
  const int parity = ell % 4 == 3 ? 1 : 0;  // chi(-1) = (-1)^parity
  const int sign = ((1 + (k - parity) / 2) % 2 == 0) ? 1 : -1;
  Rational out = generalized_bernoulli(k, ell) * ell * sign / (2 * k);
  out.canonicalize();
  return out;
}

DirichletEstimate inv_alpha_numeric(int ell, double tail_tol) {
  require_prime_ge5(ell, "inv_alpha_numeric");
  using boost::multiprecision::pow;
  const int k = (ell - 1) / 2;
  const Float50 pi = boost::math::constants::pi<Float50>();
  // 1/alpha = ((ell-3)/2)! ell^{ell/2} L(chi, k) / (2 pi)^k
  Float50 scale = Float50(factorial(static_cast<unsigned long>(k - 1)).get_str());
  scale *= pow(Float50(ell), Float50(ell) / 2) / pow(2 * pi, k);

  // (ell-1) (N+1)^{-k} * scale <= tail_tol
  const double n_real = std::pow(static_cast<double>(scale) * (ell - 1) / tail_tol, 1.0 / k);
  const long terms = static_cast<long>(std::ceil(n_real)) + 1;

  Float50 sum = 0;
  for (long m = terms; m >= 1; --m) {
    const int chi = legendre(m, ell);
    if (chi == 0) continue;
    const Float50 term = 1 / pow(Float50(m), k);
    sum += chi > 0 ? term : Float50(-term);
  }
  DirichletEstimate est;
  est.terms = terms;
  est.value = sum * scale;
  est.tail_bound = scale * (ell - 1) / pow(Float50(terms + 1), k);
  return est;
}

BigCount inv_alpha(int ell) {
  static std::mutex mutex;
  static std::map<int, BigCount> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(ell); it != memo.end()) return it->second;
  }
  const Rational exact = inv_alpha_exact(ell);
  if (exact.get_den() != 1 || exact <= 0)
    throw std::runtime_error("L-value computation inconsistent: 1/alpha_" + std::to_string(ell) + " = " +
                             exact.get_str() + " is not a positive integer");
  const DirichletEstimate numeric = inv_alpha_numeric(ell);
  const Float50 diff = abs(numeric.value - Float50(exact.get_num().get_str()));
  if (diff > Float50(1e-6))
    throw std::runtime_error("L-value computation inconsistent for ell = " + std::to_string(ell));
  std::lock_guard lock(mutex);
  return memo.emplace(ell, exact.get_num()).first->second;
}

EllParams make_ell_params(int ell) {
  require_prime_ge5(ell, "make_ell_params");
  return EllParams{ell, delta_ell(ell), inv_alpha(ell), (ell - 3) / 2};
}

int c2_closed(long n) {
  if (n < 0) throw std::invalid_argument("c2_closed: negative n");
  // n = k(k+1)/2  <=>  8n + 1 is a perfect square
  const long m = 8 * n + 1;
  long r = static_cast<long>(std::sqrt(static_cast<double>(m)));
  while (r * r > m) --r;
  while ((r + 1) * (r + 1) <= m) ++r;
  return r * r == m ? 1 : 0;
}

long c3_closed(long n) {
  if (n < 0) throw std::invalid_argument("c3_closed: negative n");
  const long m = 3 * n + 1;
  long sum = 0;
  for (long d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    sum += legendre(d, 3);
    if (d != m / d) sum += legendre(m / d, 3);
  }
  return sum;
}

Rational core_main_term(long n, int ell) {
  if (n < 0) throw std::invalid_argument("core_main_term: negative n");
  Rational out(sigma_twisted(n + delta_ell(ell), ell), inv_alpha(ell));
  out.canonicalize();
  return out;
}

bool core_lower_bound_ok(long n, int ell, const BigCount& core_count) {
  if (n < 1) throw std::invalid_argument("core_lower_bound_ok: n must be positive");
  if (ell < 11 || !is_prime(ell)) throw std::invalid_argument("core_lower_bound_ok: ell must be a prime >= 11");
  return core_count * inv_alpha(ell) * 5 > 2 * pow_int(n, static_cast<unsigned long>((ell - 3) / 2));
}

bool core_lower_bound_ok(long n, int ell) {
  if (n < 1) throw std::invalid_argument("core_lower_bound_ok: n must be positive");
  return core_lower_bound_ok(n, ell, count_cores(static_cast<int>(n), ell));
}

}  // namespace corz
