#include "tripack/rational.h"

#include <cctype>
#include <cmath>

#include "tripack/errors.h"

namespace tripack {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto digits = [&](std::string_view part, std::size_t offset, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && part[i] == '-') ++i;
    if (i == part.size()) throw ParseError("expected digits in rational", offset + i);
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
        throw ParseError("unexpected character in rational", offset + i);
      }
    }
    return mpz_class(std::string(part));
  };
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(digits(text, 0, true));
  mpz_class num = digits(text.substr(0, slash), 0, true);
  mpz_class den = digits(text.substr(slash + 1), slash + 1, false);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational approximate(double x, const ApproximationOptions& options) {
  if (!std::isfinite(x)) throw InputError("cannot approximate a non-finite value");
  const bool negative = x < 0;
  const double abs_x = std::fabs(x);
  // The double is an exact dyadic rational; expand that exactly.
  Rational exact(abs_x);
  mpz_class num = exact.get_num();
  mpz_class den = exact.get_den();
  mpz_class h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  const mpz_class max_den = options.max_denominator;
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class h = a * h1 + h2;
    mpz_class k = a * k1 + k2;
    if (k > max_den) break;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    Rational convergent(h1, k1);
    if (std::fabs(convergent.get_d() - abs_x) <= options.tolerance) break;
    mpz_class rem = num - a * den;
    if (rem == 0) break;
    num = den;
    den = rem;
  }
  if (k1 == 0) return Rational(0);  // unreachable: first convergent has k = 1
  Rational result(h1, k1);
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

}  // namespace tripack
