/**
 * @file multilinear.hpp
 * @brief Invariant multilinear operators obtained by contracting products of
 *        invariant lifts, the quantization pairing and the weighted bracket.
 */
#pragma once

#include <vector>

#include "projstar/ambient.hpp"

namespace projstar {

enum class LBetaMethod {
  Auto,    ///< Direct for one or two arguments, otherwise peel when admissible
  Direct,  ///< iterated ambient divergence of the product of lifts
  Peel     ///< successive subtraction of lifts from the product of lifts
};

/// Product of the invariant lifts of the arguments.
AmbientSymTensor lift_product(const std::vector<SymTensorField>& args, const Connection& conn);

/// L_beta(a_1, ..., a_p): valence beta, weight the sum of the weights.
SymTensorField l_beta(const std::vector<SymTensorField>& args, int beta, const Connection& conn,
                      LBetaMethod method = LBetaMethod::Auto);

/// Result of peeling the product of lifts into lifts of lower valence:
///   product of lifts = sum_s w^s lift(u_s).
struct PeelDecomposition {
  int n = 0;
  int K = 0;
  Rat weight = 0;
  std::vector<SymTensorField> u;  ///< u[s] has valence K - s

  /// L_{K-s} = u_s (weight + n + 2K - s)_(s) / binom(K, s).
  SymTensorField l(int beta) const;
};

/// Peels the product of lifts; throws ExcludedWeight when a needed lift of
/// a partial valence is unavailable.
PeelDecomposition peel_decompose(const std::vector<SymTensorField>& args, const Connection& conn);

/// L_0(a, f) for a polynomial density f of weight `mu` (rational or formal).
Poly quantize_pair(const SymTensorField& a, const Poly& f, const Poly& mu, const Connection& conn);

/// Normal-ordered full symbol of f -> L_0(a, f) in (x, d, mu): the operator
/// sum_alpha c_alpha(x) partial^alpha is stored as sum_alpha c_alpha(x) d^alpha.
Poly quantize_symbol(const SymTensorField& a, const Poly& mu, const Connection& conn);
/// As above with a precomputed plane-wave jet of order at least a.k.
Poly quantize_symbol(const SymTensorField& a, const std::vector<Poly>& plane_wave_jet, const Connection& conn);
/// Plane-wave density jet J_0..J_order at weight mu.
std::vector<Poly> plane_wave_jet(const Poly& mu, const Connection& conn, int order);

/// Invariant bilinear bracket of weighted fields; reduces to the Schouten
/// bracket when both weights vanish.
SymTensorField weighted_pairing(const SymTensorField& a, const SymTensorField& b, const Connection& conn);

/// Symbol of the symmetric operator u -> L_{i_1...i_order} u on densities of
/// weight `weight`, built from nabla nabla u - weight P u by the recursion
///   L^(r+1) = sym nabla L^(r) + r (r - 1 - weight) P sym L^(r-1).
Poly symmetric_jet_operator(const Poly& u, const Poly& weight, int order, const Connection& conn);

/// The invariant operator of order k+1 on densities of weight k.
Poly invariant_operator_L(const DensityField& u, int k, const Connection& conn);

/// Symbol of the covariant derivative of a covariant symbol of weight w:
///   d_i S + w tau_i S - Gamma_ij^k eta^j dS/deta^k.
Poly covariant_symbol_nabla(const Poly& s, int i, const Connection& conn, const Poly& weight);

}  // namespace projstar
