#pragma once

#include <gmpxx.h>

#include <string>

namespace symcone {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(long num, long den = 1) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const BigInt &v) { return v.get_str(); }

/// "p/q" or "p" when the denominator is 1.
inline std::string to_string(const BigRational &v) { return v.get_str(); }

BigInt factorial(unsigned n);
BigInt binomial(long n, long k);

} // namespace symcone
