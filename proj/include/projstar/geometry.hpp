/**
 * @file geometry.hpp
 * @brief Base-chart tensor calculus: divergence, brackets, projective change,
 *        Bianchi identities and projective Lie derivatives.
 */
#pragma once

#include <string>
#include <vector>

#include "projstar/connection.hpp"
#include "projstar/tensor.hpp"

namespace projstar {

/// The second-order operator
///   D = d^2/dz_i dx_i + (Gamma_ip^p + w tau_i) d/dz_i + z_k Gamma_ij^k d^2/dz_i dz_j
/// on fiber polynomials, for symbols of weight `weight`. On a k-vector symbol
/// it returns k times the symbol of the divergence.
Poly divergence_operator(const Poly& symbol, const Connection& conn, const Poly& weight = Poly());

/// nabla_p a^{i...p}, a field of valence k-1 and the same weight.
SymTensorField divergence(const SymTensorField& a, const Connection& conn);
/// r-fold divergence.
SymTensorField divergence(const SymTensorField& a, const Connection& conn, int times);

/// Symbol of nabla_p a: d_p A + w tau_p A + Gamma_pj^k z_k dA/dz_j.
Poly symbol_nabla(const Poly& symbol, int p, const Connection& conn, const Poly& weight = Poly());

/// Symmetric Schouten bracket of two weight-zero fields, computed with the
/// covariant derivatives of `conn`.
SymTensorField schouten_bracket(const SymTensorField& a, const SymTensorField& b, const Connection& conn);
/// Coordinate Poisson bracket sum_i (dA/dz_i dB/dx_i - dB/dz_i dA/dx_i).
Poly poisson_bracket(const Poly& a, const Poly& b);

/// Gamma'_ij^k = Gamma_ij^k + g_i delta_j^k + g_j delta_i^k. The scale form
/// shifts by g, so density components keep their reference scale.
Connection projective_change(const Connection& conn, const std::vector<Poly>& g);

/// Exterior derivative of a polynomial function.
std::vector<Poly> exact_form(int n, const Poly& f);

struct IdentityReport {
  std::string name;
  bool holds = false;
};

/// Checks the differential Bianchi identities for the projective Weyl and
/// Cotton tensors and the vanishing of the skew part of nabla P.
std::vector<IdentityReport> bianchi_check(const Connection& conn);

/// Lie derivative of the connection along the vector field with symbol `x`:
///   d_i d_j X^k + X^p d_p Gamma_ij^k - Gamma_ij^p d_p X^k
///     + Gamma_pj^k d_i X^p + Gamma_ip^k d_j X^p,
/// as a tensor with slots "ddu".
Tensor lie_derivative_connection(const Poly& x, const Connection& conn);
/// Trace-free part Q_ij^k - (delta_i^k Q_jp^p + delta_j^k Q_ip^p)/(n+1).
Tensor trace_free_part(const Tensor& q);
/// The vector field preserves the projective structure.
bool is_projective_automorphism(const Poly& x, const Connection& conn);

}  // namespace projstar
