/**
 * @file ambient.hpp
 * @brief Ambient-side calculus in a fixed scale: invariant lifts, the
 *        ambient trace-divergence, density jets and excluded-weight operators.
 *
 * An ambient symmetric tensor of valence k is stored through its symbol in
 * (z, w), where w is the fiber slot dual to the Euler field. The coefficient
 * of w^(k-m) is the valence-m horizontal component a_m.
 */
#pragma once

#include <vector>

#include "projstar/connection.hpp"
#include "projstar/tensor.hpp"

namespace projstar {

/// Default bound on jet order and valence.
inline constexpr int kDefaultMaxOrder = 6;

struct AmbientSymTensor {
  int n = 0;
  int k = 0;
  Rat weight = 0;
  Poly body;

  /// Horizontal component of valence m (coefficient of w^(k-m)).
  SymTensorField component(int m) const;
  bool operator==(const AmbientSymTensor& o) const = default;
};

/// Assembles sum_m a_m w^(k-m) from components a_0..a_k.
AmbientSymTensor ambient_from_components(const std::vector<SymTensorField>& comps);

/// Weights at which the lift of a valence-k field fails: -n-k, ..., -n-2k+1.
bool is_excluded_weight(int n, int k, const Rat& weight);

/// Symbol of the ambient covariant derivative of a contravariant symmetric
/// tensor along the frame direction `c` (0..n-1 horizontal, -1 for Euler).
/// With `plane_wave` the coefficients are understood to multiply exp(d.x),
/// so horizontal frame derivatives pick up d_i.
Poly ambient_nabla(const Poly& body, int c, const Connection& conn, const Poly& weight, bool plane_wave = false);

/// Sum over frame directions of d/dzeta_C nabla_C; equals valence times the
/// ambient trace-divergence.
Poly ambient_D(const Poly& body, const Connection& conn, const Poly& weight, bool plane_wave = false);

/// Contracted ambient derivative nabla_P T^{...P} (valence k-1).
AmbientSymTensor ambient_trace_div(const AmbientSymTensor& t, const Connection& conn);

/// The unique trace-free homogeneous lift of a non-excluded field.
AmbientSymTensor invariant_lift(const SymTensorField& a, const Connection& conn);

/// Closed form of the lift for a Ricci-flat representative:
///   a_(k-m) = (-1)^m binom(k,m) / (weight+n+2k-1)_(m) * (m-fold divergence).
AmbientSymTensor flat_lift_closed_form(const SymTensorField& a, const Connection& conn);

/// Invariant operator of order k-m available at the excluded weight
/// -n-k-m, normalized so that its leading term is the (k-m)-fold divergence.
SymTensorField excluded_weight_operator(const SymTensorField& a, const Connection& conn);

/// Symmetric product; weights and valences add.
AmbientSymTensor ambient_sym_product(const AmbientSymTensor& a, const AmbientSymTensor& b);

/// Multiplies by the s-th power of the Euler field.
AmbientSymTensor pad_euler(const AmbientSymTensor& a, int s);

/// Symbols J_0..J_r of the symmetrized ambient derivatives of a density of
/// weight `weight`: J_r(eta, v) with eta stored in z and v in w. In plane-wave
/// mode the density is exp(d.x) and the common exponential factor is dropped.
std::vector<Poly> ambient_density_jet(const Poly& f, const Poly& weight, const Connection& conn, int r,
                                      bool plane_wave = false, int max_order = kDefaultMaxOrder);

/// Full contraction (1/k!) T(d/deta, d/dv) J of a valence-k contravariant
/// symbol with a covariant symbol of the same degree.
Poly contract_symbols(const Poly& t, const Poly& j, int k);

/// Fiber-free part of a symbol in (z, w): sets w = 0.
Poly horizontal_part(const Poly& body);

}  // namespace projstar
