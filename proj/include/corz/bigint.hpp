#pragma once

#include <gmpxx.h>

#include <string>

namespace corz {

/// Arbitrary-precision nonnegative count (p(n), p_A(n), c_l(n), zero counts).
using BigCount = mpz_class;
/// Arbitrary-precision signed character value.
using CharValue = mpz_class;
/// Exact rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

inline std::string to_decimal(const mpz_class& v) { return v.get_str(10); }

inline BigCount pow_int(long base, unsigned long exp) {
  BigCount r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exp);
  if (base < 0 && (exp % 2) == 1) r = -r;
  return r;
}

inline BigCount factorial(unsigned long n) {
  BigCount r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace corz
