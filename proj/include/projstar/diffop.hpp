/**
 * @file diffop.hpp
 * @brief Differential operators between density bundles, stored through
 *        normal-ordered symbols in (x, d, mu).
 */
#pragma once

#include <vector>

#include "projstar/poly.hpp"

namespace projstar {

/// Operator sum_alpha c_alpha(x; mu) d^alpha from weight `source` densities
/// to weight `source + shift` densities. The symbol replaces d^alpha by the
/// monomial in d1..dn.
struct DensityDiffOp {
  int n = 0;
  Poly source;  ///< rational or the formal mu
  Rat shift = 0;
  Poly symbol;

  static DensityDiffOp identity(int n, const Poly& source);
  int order() const { return symbol.degree_in(mask::kD); }
  bool operator==(const DensityDiffOp& o) const = default;
};

/// Applies the operator to a polynomial density.
Poly apply(const DensityDiffOp& op, const Poly& f);

/// Composition a after b; the target weight of b must be the source of a.
DensityDiffOp compose(const DensityDiffOp& a, const DensityDiffOp& b);

/// sigma_{a o b} = sum_gamma (1/gamma!) d_d^gamma sigma_a * d_x^gamma sigma_b.
Poly compose_symbols(const Poly& a, const Poly& b);

/// Top-order part of the symbol, with d renamed to z.
Poly principal_symbol(const Poly& symbol);

/// Formal adjoint on a flat chart: sum (-1)^|alpha| d^alpha o c_alpha. The
/// result acts on weight -n-1-source-shift densities and its coefficients
/// are rewritten in terms of that source weight.
DensityDiffOp formal_adjoint(const DensityDiffOp& op);

/// Symbol of sum_alpha (-1)^|alpha| d^alpha o c_alpha, no weight bookkeeping.
Poly adjoint_symbol(const Poly& symbol);

/// Vector field J with (op u) v - u (op* v) = d_i J^i, built by moving
/// derivatives off u one at a time.
std::vector<Poly> adjoint_potential(int n, const Poly& symbol, const Poly& u, const Poly& v);

}  // namespace projstar
