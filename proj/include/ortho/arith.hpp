#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ortho {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  if (k > n) return BigInt(0);
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline BigInt parse_bigint(const std::string& s) {
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0) throw std::invalid_argument("not a decimal integer: " + s);
  return v;
}

inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("not a rational: " + s);
  q.canonicalize();
  return q;
}

// Throws if the value does not fit; used where exact integer kernels take over.
inline std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer exceeds 64 bits: " + v.get_str());
  return v.get_si();
}

}  // namespace ortho
