#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace projstar {

/// Exact rational scalar; always canonical (lowest terms, positive denominator).
using Rat = mpq_class;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (polynomials, connection files, symbols).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A weight falls in the excluded set of some construction.
class ExcludedWeight : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

std::string to_string(const Rat& r);

/// Parses "p" or "p/q" with optional leading sign.
Rat parse_rat(std::string_view s);

Rat factorial(int r);

/// a_(r) = a(a-1)...(a-r+1), with a_(0) = 1.
Rat falling_factorial(const Rat& a, int r);

/// binom(a, r) = a_(r) / r! for rational a.
Rat binomial(const Rat& a, int r);

}  // namespace projstar
