#pragma once

#include <string>
#include <vector>

#include "projstar/connection.hpp"
#include "projstar/poly.hpp"

namespace projstar {

/// Weighted symmetric k-vector field a^{i_1...i_k} stored through its symbol
/// body(z) = a^{i_1...i_k} z_{i_1}...z_{i_k}. Coefficients may involve mu.
struct SymTensorField {
  int n = 0;
  int k = 0;
  Rat weight = 0;
  Poly body;

  SymTensorField() = default;
  SymTensorField(int n, int k, Rat weight, Poly body);

  /// Density (valence 0) with the given component.
  static SymTensorField scalar(int n, Rat weight, Poly value);
  /// Infers the valence from the fiber degree of a nonzero body.
  static SymTensorField from_symbol(int n, Rat weight, const Poly& body);

  /// a^{i_1...i_k} for a sorted or unsorted index list.
  Poly component(const std::vector<int>& idx) const;
  bool operator==(const SymTensorField& o) const = default;
};

/// Density of weight `weight` (possibly the formal mu), given by its
/// component in the reference scale.
struct DensityField {
  Poly weight;
  Poly value;
};

/// Dense component tensor with a mix of contravariant ('u') and covariant
/// ('d') slots. Component index is row-major over the slots.
class Tensor {
 public:
  Tensor() = default;
  Tensor(int n, std::string slots, Poly weight = Poly());

  int dim() const { return n_; }
  int rank() const { return static_cast<int>(slots_.size()); }
  const std::string& slots() const { return slots_; }
  const Poly& weight() const { return weight_; }
  std::size_t size() const { return c_.size(); }

  Poly& at(const std::vector<int>& idx) { return c_[offset(idx)]; }
  const Poly& at(const std::vector<int>& idx) const { return c_[offset(idx)]; }
  Poly& flat(std::size_t i) { return c_[i]; }
  const Poly& flat(std::size_t i) const { return c_[i]; }
  std::vector<int> unflatten(std::size_t i) const;
  std::size_t offset(const std::vector<int>& idx) const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Poly& c);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Poly& c) { return a *= c; }
  friend Tensor operator*(const Poly& c, Tensor a) { return a *= c; }
  bool operator==(const Tensor& o) const;
  bool is_zero() const;

 private:
  int n_ = 0;
  std::string slots_;
  Poly weight_;
  std::vector<Poly> c_;
};

/// Scalar tensor (rank 0).
Tensor scalar_tensor(int n, const Poly& value, const Poly& weight = Poly());
/// Components of a symmetric field as a contravariant tensor.
Tensor to_tensor(const SymTensorField& a);
/// Components of a density.
Tensor to_tensor(int n, const DensityField& f);
/// Covariant symmetric tensor from a symbol S(z) = S_{i...} z_i...
Tensor covariant_from_symbol(int n, int k, const Poly& body, const Poly& weight = Poly());
/// Symbol T^{i...} z_i ... of a tensor whose slots are all of one kind
/// (symmetrizes implicitly).
Poly symbol_of(const Tensor& t);
/// Weight-carrying field from a fully contravariant tensor.
SymTensorField sym_field(const Tensor& t, const Rat& weight);

Tensor outer(const Tensor& a, const Tensor& b);
/// Contracts slots s1 and s2 (traced over the same index value).
Tensor contract(const Tensor& t, int s1, int s2);
/// New slot order: result slot j is old slot perm[j].
Tensor permute(const Tensor& t, const std::vector<int>& perm);
/// Contracts the leading slots of `a` against the leading slots of `b`,
/// pairing slot j of a with slot j of b for j < count.
Tensor contract_leading(const Tensor& a, const Tensor& b, int count);

/// Covariant derivative nabla_p T; the new covariant slot is placed first.
/// Weighted tensors pick up weight * tau_p from the connection's scale form.
Tensor nabla(const Tensor& t, const Connection& conn);
/// Iterated covariant derivative nabla_{p_1} ... nabla_{p_r} T.
Tensor nabla(const Tensor& t, const Connection& conn, int times);
/// P_ij as a covariant tensor.
Tensor schouten_tensor(const Connection& conn);

}  // namespace projstar
