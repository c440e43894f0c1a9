#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "projstar/rational.hpp"

namespace projstar {

/// Largest base dimension supported by the fixed variable layout.
inline constexpr int kMaxDim = 4;

/// Variable identifiers, listed in monomial-order priority.
///   x1..x4   base coordinates
///   z1..z4   fiber coordinates (symbol variables)
///   w        fiber slot dual to the Euler field
///   d1..d4   normal-ordered derivative symbols of differential operators
///   mu       formal density weight
namespace var {
inline constexpr int kX = 0;
inline constexpr int kZ = kMaxDim;
inline constexpr int kW = 2 * kMaxDim;
inline constexpr int kD = 2 * kMaxDim + 1;
inline constexpr int kMu = 3 * kMaxDim + 1;
inline constexpr int kCount = 3 * kMaxDim + 2;

constexpr int x(int i) { return kX + i; }
constexpr int z(int i) { return kZ + i; }
constexpr int d(int i) { return kD + i; }
}  // namespace var

using VarMask = std::uint32_t;

namespace mask {
inline constexpr VarMask kX = (1u << kMaxDim) - 1u;
inline constexpr VarMask kZ = kX << var::kZ;
inline constexpr VarMask kW = 1u << var::kW;
inline constexpr VarMask kD = kX << var::kD;
inline constexpr VarMask kMu = 1u << var::kMu;
inline constexpr VarMask kFiber = kZ | kW;
}  // namespace mask

std::string var_name(int v);

/// Exponent vector; byte 0 holds the total degree so that bytewise
/// comparison realizes the graded lexicographic order.
struct Mono {
  std::array<std::uint8_t, 16> e{};

  int deg() const { return e[0]; }
  int operator[](int v) const { return e[v + 1]; }
  void set(int v, int power);
  /// Degree restricted to the variables in `m`.
  int deg_in(VarMask m) const;
  /// Copy keeping only the variables in `m`.
  Mono restrict(VarMask m) const;
  bool is_one() const { return e[0] == 0; }
};

inline bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
inline bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }
/// Strict monomial order; `a > b` means `a` precedes `b` in canonical form.
inline bool operator>(const Mono& a, const Mono& b) {
  return std::memcmp(a.e.data(), b.e.data(), a.e.size()) > 0;
}
inline bool operator<(const Mono& a, const Mono& b) { return b > a; }

Mono operator*(const Mono& a, const Mono& b);
/// True when every exponent of `b` is at most that of `a`.
bool divides(const Mono& b, const Mono& a);
Mono operator/(const Mono& a, const Mono& b);

struct MonoHash {
  std::size_t operator()(const Mono& m) const noexcept;
};

/// Multivariate polynomial over Rat in the fixed variable layout.
/// Terms are kept sorted in strictly decreasing monomial order with
/// nonzero coefficients, so structural equality is mathematical equality.
class Poly {
 public:
  using Term = std::pair<Mono, Rat>;

  Poly() = default;
  Poly(const Rat& c);  // NOLINT(google-explicit-constructor)
  Poly(long c);        // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(static_cast<long>(c)) {}  // NOLINT

  static Poly variable(int v, int power = 1);
  static Poly monomial(const Mono& m, const Rat& c);
  /// Builds from arbitrary (unsorted, possibly repeated) terms.
  static Poly from_terms(std::vector<Term> terms);
  /// Adopts terms already in canonical order (strictly decreasing, nonzero).
  static Poly from_sorted(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  /// Coefficient of the monomial 1.
  Rat constant_term() const;
  /// Coefficient of an exact monomial.
  Rat coeff(const Mono& m) const;
  int total_degree() const;
  int degree(int v) const;
  int degree_in(VarMask m) const;
  /// Set of variables that occur.
  VarMask support() const;
  bool uses_only(VarMask m) const { return (support() & ~m) == 0; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);
  Poly& operator/=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend Poly operator/(Poly a, const Rat& c) { return a /= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Adds c * m * o in place (the workhorse of the symbolic routines).
  void add_scaled(const Poly& o, const Rat& c, const Mono& m = Mono{});

  std::string to_string() const;

 private:
  std::vector<Term> t_;
  friend class PolyBuilder;
};

/// Accumulates terms in any order and canonicalizes once.
class PolyBuilder {
 public:
  void add(const Mono& m, const Rat& c);
  void add(const Poly& p, const Rat& c = 1, const Mono& shift = Mono{});
  Poly build();

 private:
  std::vector<Poly::Term> terms_;
};

Poly pow(const Poly& p, int e);

/// Formal partial derivative with respect to variable `v`.
Poly diff(const Poly& p, int v);
/// Multiplies by v^power.
Poly mul_var(const Poly& p, int v, int power = 1);
/// Replaces variable `v` by the polynomial `value`.
Poly substitute(const Poly& p, int v, const Poly& value);
/// Coefficient of v^power, as a polynomial free of `v`.
Poly coeff_of(const Poly& p, int v, int power);
/// Terms whose degree in the variables of `m` equals `degree`.
Poly homogeneous_part(const Poly& p, VarMask m, int degree);
/// Groups terms by their monomial in the variables of `m`; each value is
/// the cofactor polynomial free of those variables. Ordered canonically.
std::vector<std::pair<Mono, Poly>> split(const Poly& p, VarMask m);
/// Renames variables: variable `from[i]` becomes `to[i]` (simultaneously).
Poly rename(const Poly& p, const std::vector<int>& from, const std::vector<int>& to);
/// Applies f to every term; results are summed.
Poly map_terms(const Poly& p, const std::function<void(const Mono&, const Rat&, PolyBuilder&)>& f);

Poly falling_factorial(const Poly& a, int r);
Poly binomial(const Poly& a, int r);

/// Parses the textual syntax: rationals, variables (x1.., z1.., w, d1.., mu),
/// `+ - * / ^` and parentheses. Division is only by rational constants.
Poly parse_poly(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace projstar
