#pragma once

// Exact scalars and the error type shared by the whole library.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace biform {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonicalizes after every arithmetic operation).
using Rational = mpq_class;
using Integer = mpz_class;

enum class ErrorCode {
  invalid_argument = 1,
  parse_error,
  bounds_exceeded,
  nonconforming_mesh,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

/// p/q in lowest terms (the two-argument mpq_class constructor does not
/// reduce).
inline Rational ratio(long p, long q) {
  Rational x(p, q);
  x.canonicalize();
  return x;
}

/// Parses "p", "-p" or "p/q" with integer p, q (q != 0). Decimal points and
/// exponents are rejected: floating input is never rounded into a rational.
Rational parse_rational(std::string_view text);

/// "p" for integers and "p/q" otherwise.
std::string to_string(const Rational& q);

}  // namespace biform
