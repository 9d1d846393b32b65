#pragma once

// Exact integer and rational helpers on top of GMP's C++ interface.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "haarpt/errors.hpp"

namespace haarpt {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline BigInt ipow(long base, unsigned long exp) { return ipow(BigInt(base), exp); }

// base^exp for any integer exponent; base must be nonzero when exp < 0.
inline Rational rpow(const Rational& base, long exp) {
  if (exp >= 0) {
    Rational out(ipow(base.get_num(), static_cast<unsigned long>(exp)),
                 ipow(base.get_den(), static_cast<unsigned long>(exp)));
    out.canonicalize();
    return out;
  }
  if (base == 0) throw UsageError("zero raised to a negative power");
  return 1 / rpow(base, -exp);
}

inline BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// Smallest integer s with s*s >= x, for x >= 0.
inline BigInt ceil_sqrt(const BigInt& x) {
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), x.get_mpz_t());
  if (root * root < x) ++root;
  return root;
}

inline bool is_perfect_square(const BigInt& x) { return mpz_perfect_square_p(x.get_mpz_t()) != 0; }

inline BigInt ceil(const Rational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

// Exact quotient; throws if b does not divide a.
inline BigInt exact_div(const BigInt& a, const BigInt& b, const char* context) {
  if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw InternalCheckError(std::string("inexact division in ") + context);
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline double to_double(const Rational& q) { return q.get_d(); }

// Wire format: exact rationals travel as decimal strings.
inline nlohmann::json to_json(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

inline nlohmann::json to_json(const BigInt& x) { return x.get_str(); }

inline Rational rational_from_json(const nlohmann::json& j) {
  return make_rational(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
}

}  // namespace haarpt
