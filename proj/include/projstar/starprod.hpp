/**
 * @file starprod.hpp
 * @brief Quantization and symbol maps, the star products they induce, the
 *        commutative limit product, gauge transforms and inner derivations.
 */
#pragma once

#include <vector>

#include "projstar/diffop.hpp"
#include "projstar/multilinear.hpp"

namespace projstar {

/// Operator with the given (possibly mixed-valence) symbol of weight `weight`,
/// acting on densities of weight `mu`. Each homogeneous piece is quantized
/// through L_0.
DensityDiffOp quantization_map(const Poly& symbol, const Rat& weight, const Poly& mu, const Connection& conn);

/// Inverse of quantization_map: peels principal symbols. Coefficients of the
/// result may involve mu.
Poly symbol_map(const DensityDiffOp& op, const Connection& conn);

/// Coefficients B_0..B_{k+l} of a star b at density weight `mu`, extended
/// bilinearly over homogeneous pieces of weight-zero symbols. B_r lowers the
/// total valence by r.
std::vector<Poly> star_product(const Poly& a, const Poly& b, const Poly& mu, const Connection& conn);

/// Coefficient of c^r in the commutative limit product, from the closed form
///   binom(K, r) / (n + 2K - r)_(r) * L_{K-r}(a, b).
std::vector<Poly> star_infinity(const Poly& a, const Poly& b, const Connection& conn);

/// The same coefficients read off the mu^r-leading part of B_r at formal mu.
std::vector<Poly> star_infinity_from_limit(const Poly& a, const Poly& b, const Connection& conn);

/// The same coefficients from peeling the product of lifts.
std::vector<Poly> star_infinity_from_lifts(const Poly& a, const Poly& b, const Connection& conn);

/// C_1(a) = k/(n+2k-1) nabla_p a^{...p} on each homogeneous piece.
Poly c1_cochain(const Poly& a, const Connection& conn);
/// a C_1(b) - C_1(a b) + C_1(a) b.
Poly c1_coboundary(const Poly& a, const Poly& b, const Connection& conn);
/// (k+l)/(n+2(k+l)-1) L_{k+l-1}(a, b).
Poly c1_target(const Poly& a, const Poly& b, const Connection& conn);

/// D_0(a), D_1(a), ...: graded pieces of the symbol of the operator that
/// `from` quantizes a to, read back through `to`'s symbol map.
std::vector<Poly> gauge_transform(const Connection& from, const Connection& to, const Poly& a, const Poly& mu);

struct DerivationReport {
  bool automorphism = false;   ///< X preserves the projective structure
  bool first_order = false;    ///< B_1(X,a) - B_1(a,X) = {X,a}
  bool higher_vanish = false;  ///< B_r(X,a) = B_r(a,X) for r >= 2
};

/// Checks that commutation with the vector field x is the bracket with x.
DerivationReport derivation_check(const Poly& x, const Poly& a, const Poly& mu, const Connection& conn);

/// Splits a symbol into homogeneous pieces by fiber degree (index = valence).
std::vector<Poly> valence_pieces(const Poly& a);

}  // namespace projstar
