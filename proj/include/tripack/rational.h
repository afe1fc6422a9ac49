#ifndef TRIPACK_RATIONAL_H_
#define TRIPACK_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tripack {

// Arbitrary precision rational, kept in lowest terms by GMP.
using Rational = mpq_class;

// p/q in lowest terms. mpq_class(p, q) alone does not reduce.
inline Rational make_rational(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// Always "p/q", including "p/1" for integers.
std::string to_string(const Rational& q);

// Accepts "p/q" or "p" with an optional leading '-'.
Rational parse_rational(std::string_view text);

struct ApproximationOptions {
  long max_denominator = 1'000'000;
  double tolerance = 1e-12;
};

// Continued-fraction approximation of `x`: the last convergent whose
// denominator does not exceed `max_denominator`, stopping early once a
// convergent is within `tolerance` of `x`.
Rational approximate(double x, const ApproximationOptions& options = {});

inline Rational floor(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(r);
}

}  // namespace tripack

#endif  // TRIPACK_RATIONAL_H_
