/**
 * @file random.hpp
 * @brief Seeded generators of polynomials, tensors and connections for the
 *        property suites.
 */
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "projstar/connection.hpp"
#include "projstar/tensor.hpp"

namespace projstar {

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  /// Nonzero integer in [-bound, bound].
  long nonzero(long bound);

  /// Polynomial in x1..xn of total degree <= max_deg with at most `terms`
  /// terms and integer coefficients in [-3, 3].
  Poly base_poly(int n, int max_deg, int terms = 3);
  /// Symbol of a random k-vector field with coefficient degree <= max_deg.
  Poly symbol(int n, int k, int max_deg, int terms = 3);
  SymTensorField field(int n, int k, const Rat& weight, int max_deg, int terms = 3);
  /// Small rational weight avoiding the excluded set of valence k.
  Rat weight(int n, int k);

  /// Random trace-free symmetric Christoffel symbols of degree <= max_deg.
  Connection trace_free_connection(int n, int max_deg, int terms = 2);
  /// Exact covector d f with f of degree <= max_deg + 1.
  std::vector<Poly> exact_covector(int n, int max_deg);

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

/// Subtracts the trace part so that Gamma_ip^p = 0.
std::vector<Poly> remove_trace(int n, std::vector<Poly> gamma);

}  // namespace projstar
