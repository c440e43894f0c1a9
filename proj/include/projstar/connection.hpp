#pragma once

#include <memory>
#include <vector>

#include "projstar/poly.hpp"

namespace projstar {

/// Curvature quantities of a torsion-free connection, with the convention
///   2 nabla_[i nabla_j] alpha_k = -R_ijk^p alpha_p,  Ric_ij = R_ipj^p.
struct CurvatureData {
  int n = 0;
  std::vector<Poly> R;    ///< R_ijk^l
  std::vector<Poly> Ric;  ///< Ric_ij
  std::vector<Poly> P;    ///< projective Schouten tensor P_ij
  std::vector<Poly> B;    ///< projective Weyl tensor B_ijk^l
  std::vector<Poly> C;    ///< projective Cotton tensor C_ijk

  const Poly& r(int i, int j, int k, int l) const { return R[((i * n + j) * n + k) * n + l]; }
  const Poly& ric(int i, int j) const { return Ric[i * n + j]; }
  const Poly& p(int i, int j) const { return P[i * n + j]; }
  const Poly& b(int i, int j, int k, int l) const { return B[((i * n + j) * n + k) * n + l]; }
  const Poly& c(int i, int j, int k) const { return C[(i * n + j) * n + k]; }
};

/// Torsion-free affine connection on a polynomial chart, Christoffel symbols
/// Gamma_ij^k stored at index (i*n + j)*n + k.
///
/// Density components are expressed relative to a fixed reference scale.
/// The optional scale form tau records how the scale made parallel by this
/// representative differs from the reference one: a weight-w density
/// differentiates as d_i + w*tau_i. It is zero unless the connection was
/// produced by projective_change, which keeps the reference scale fixed.
class Connection {
 public:
  /// Flat connection in dimension n.
  explicit Connection(int n);
  Connection(int n, std::vector<Poly> gamma, std::vector<Poly> scale_form = {});

  int dim() const { return n_; }
  const Poly& gamma(int i, int j, int k) const { return gamma_[(i * n_ + j) * n_ + k]; }
  const std::vector<Poly>& gammas() const { return gamma_; }
  const Poly& scale_form(int i) const { return scale_[i]; }
  const std::vector<Poly>& scale_forms() const { return scale_; }
  /// Gamma_ip^p.
  const Poly& trace(int i) const { return trace_[i]; }
  const Poly& schouten(int i, int j) const { return curv_->p(i, j); }
  const CurvatureData& curvature() const { return *curv_; }
  bool is_flat() const { return flat_; }
  bool has_scale_form() const { return scaled_; }
  /// Every Christoffel symbol vanishes (the scale form may not).
  bool christoffels_vanish() const { return zero_gamma_; }

 private:
  int n_;
  std::vector<Poly> gamma_;
  std::vector<Poly> scale_;
  std::vector<Poly> trace_;
  std::shared_ptr<const CurvatureData> curv_;
  bool flat_ = true;
  bool scaled_ = false;
  bool zero_gamma_ = true;

  void init();
};

}  // namespace projstar
