#pragma once

#include <gmpxx.h>

#include <string>

namespace jaccomb {

// Exact arithmetic throughout: integers and rationals are GMP classes.
// mpq_class values are kept canonical (coprime numerator/denominator,
// positive denominator); arithmetic results already are, and every place
// that builds a rational from raw parts goes through make_rat.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

// gmpxx has no long long constructor; long is 64-bit on every platform this
// library targets, so the narrowing cast is lossless.
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

// floor(x) as an exact integer.
inline Int floor_rat(const Rat& x) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

// ceil(x): least integer >= x.
inline Int ceil_rat(const Rat& x) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

// Nearest integer m with |x - m| < 1/2; errors on half-integers (the callers
// guarantee x is not one, e.g. because a general polarization keeps subcurve
// sums off the half-integer lattice).
Int round_nearest(const Rat& x);

// Strict "num/den" or "num" with optional leading '-'; no decimals, no
// whitespace.  format_rational(parse_rational(s)) round-trips canonically.
Rat parse_rational(const std::string& s);
std::string format_rational(const Rat& x);

// Range-checked conversion for desk-scale quantities.
long long to_longlong(const Int& x);

}  // namespace jaccomb
