/**
 * @file onedim.hpp
 * @brief One-dimensional specialization: lifts of weighted functions,
 *        Rankin-Cohen brackets, their multilinear generalization and the
 *        Cohen-Manin-Zagier products.
 *
 * A weighted function u of weight sigma is a polynomial in x1 with D = d/dx1
 * in the flat scale. A symmetric k-tensor u (d/dx)^k of weight lambda is the
 * weighted function u of weight lambda + 2k; a modular form of weight k is a
 * weighted function of weight -k.
 */
#pragma once

#include <vector>

#include "projstar/poly.hpp"

namespace projstar {

struct WeightedFunction1D {
  Rat sigma = 0;
  Poly u;  ///< polynomial in x1 (coefficients may involve mu)
  bool operator==(const WeightedFunction1D& o) const = default;
};

/// d^m u / dx1^m.
Poly derivative_1d(const Poly& u, int m);

/// sigma lies in {0, 1, ..., k-1}.
bool is_excluded_1d(const Rat& sigma, int k);

/// Components of the lift of u viewed as a symmetric k-tensor:
/// entry m multiplies E^{k-m} X^m and equals (-1)^m binom(k,m) D^m u / (sigma)_(m).
std::vector<Poly> lift_1d(const WeightedFunction1D& u, int k);
/// The same components scaled by (-1)^k binom(sigma, k):
/// entry m is binom(k-1-sigma, k-m) D^m u / m!.
std::vector<Poly> lift_1d_normalized(const WeightedFunction1D& u, int k);

/// R_k(u1, u2) = sum_m (-1)^m binom(k-1-s2, m) binom(k-1-s1, k-m) D^m u1 D^{k-m} u2.
WeightedFunction1D rc_bracket(const WeightedFunction1D& u1, const WeightedFunction1D& u2, int k);

/// R_0^{k_1..k_p}(u_1, ..., u_p) from the closed multilinear sum, divided by
/// (-1)^K prod binom(sigma_i, k_i).
WeightedFunction1D rc_multilinear(const std::vector<WeightedFunction1D>& us, const std::vector<int>& ks);

/// R_beta^{k_1..k_p}(u_1, ..., u_p) evaluated through l_beta at n = 1.
WeightedFunction1D rc_multilinear_engine(const std::vector<WeightedFunction1D>& us, const std::vector<int>& ks,
                                         int beta);

/// Two-slot L_beta(u, v) for u a k-tensor of weight lambda and v of weight mu:
///   sum_m binom(k-beta-1-mu, m) binom(k-beta, m) / binom(2k+lambda, m) D^m u D^{k-beta-m} v.
Poly l_beta_two_slot(const Poly& u, int k, const Rat& lambda, const Poly& v, const Rat& mu, int beta);

/// CMZ coefficient t_r^mu for arguments of weights 2 k1 and 2 k2.
Rat cmz_t(int r, const Rat& mu, const Rat& k1, const Rat& k2);
/// CMZ coefficient t_{2r}^infinity.
Rat cmz_t_infinity(int r, const Rat& k1, const Rat& k2);

/// Weighted functions of several weights; term r of a product carries the
/// derivative order r.
using Graded1D = std::vector<WeightedFunction1D>;

/// m^(mu)(u1, u2) truncated at bracket order `order`; each argument has
/// weight 2 k_i. Entry r is t_r^mu R_r(u1, u2).
Graded1D cmz_mu_product(const WeightedFunction1D& u1, const WeightedFunction1D& u2, const Rat& mu, int order);
/// Bilinear extension of m^(mu) to sums; pieces are grouped by total order.
std::vector<Graded1D> cmz_mu_product(const std::vector<Graded1D>& a, const std::vector<Graded1D>& b, const Rat& mu,
                                     int order);
/// m^(infinity)(u1, u2) truncated at bracket order `order`; entry r is
/// t_r^infinity R_r for even r and zero for odd r.
Graded1D cmz_infinity_product(const WeightedFunction1D& u1, const WeightedFunction1D& u2, int order);

/// Coefficient of eps^s R_s(u1, u2) in u1 star^mu u2 for u1 of weight 2k and
/// u2 of weight 0.
Poly star_one_dim_coefficient(int k, int s, const Poly& mu);
/// u1 star^mu u2 for u1 of weight 2k and u2 of weight 0; entry s is the
/// eps^s coefficient.
std::vector<Poly> star_one_dim(const WeightedFunction1D& u1, const WeightedFunction1D& u2, const Poly& mu);

/// Coefficient of eps^2 R_2 in the symmetrized product
/// (u1 star^mu u2 + u1 star^{-2-mu} u2) / 2 for u1 of weight 2k, u2 of weight 0.
Rat symmetrized_second_coefficient(int k, const Rat& mu);

/// Gaussian rational re + i im.
struct GaussRat {
  Rat re = 0;
  Rat im = 0;
  bool operator==(const GaussRat& o) const = default;
};
GaussRat operator*(const GaussRat& a, const GaussRat& b);
GaussRat gauss_pow(const GaussRat& c, int e);

/// Coefficients q_r of c^r R_r(u1, u2) in u1 star_inf^c u2 for u1 of weight 2k
/// and u2 of weight 0, read off the engine at n = 1.
std::vector<Rat> star_infinity_one_dim_coefficients(int k);

struct InfinityCorrespondence {
  bool real_part_matches = false;  ///< Re at c = 2i equals m^(infinity)
  bool odd_imaginary = false;      ///< odd-order terms are purely imaginary
  std::vector<Rat> star_real;      ///< Re(q_r (2i)^r), r = 0..k
  std::vector<Rat> cmz;            ///< t_r^infinity (zero for odd r)
};

/// Compares Re{u1 star_inf^c u2 at c = 2i} with m^(infinity)(u1, u2) for
/// u1 of weight 2k and u2 of weight 0, coefficient by coefficient.
InfinityCorrespondence infinity_correspondence(int k, const GaussRat& c = GaussRat{0, 2});

}  // namespace projstar
