#pragma once

#include <gmpxx.h>

#include <string>

namespace linmap {

/// Arbitrary-precision nonnegative integer. All cycle lengths, counts and
/// divisor data use this type; nothing in the library relies on 64-bit fits.
using Nat = mpz_class;

inline Nat nat_pow(const Nat& base, unsigned long e) {
  Nat r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Nat nat_gcd(const Nat& a, const Nat& b) {
  Nat r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Nat nat_lcm(const Nat& a, const Nat& b) {
  Nat r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Nat nat_powm(const Nat& base, const Nat& e, const Nat& mod) {
  Nat r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
  return r;
}

inline std::string nat_str(const Nat& n) { return n.get_str(); }

inline unsigned long nat_to_ulong(const Nat& n) { return mpz_get_ui(n.get_mpz_t()); }

inline bool nat_fits_ulong(const Nat& n) { return mpz_fits_ulong_p(n.get_mpz_t()) != 0; }

}  // namespace linmap
