#include "projstar/connection.hpp"

#include <string>

namespace projstar {

namespace {

VarMask base_mask(int n) { return (1u << n) - 1u; }

std::string idx_str(int i, int j, int k) {
  return std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1);
}

}  // namespace

Connection::Connection(int n) : Connection(n, std::vector<Poly>(std::size_t(n) * n * n)) {}

Connection::Connection(int n, std::vector<Poly> gamma, std::vector<Poly> scale_form)
    : n_(n), gamma_(std::move(gamma)), scale_(std::move(scale_form)) {
  if (n < 1 || n > kMaxDim) throw DomainError("dimension must be between 1 and " + std::to_string(kMaxDim));
  if (gamma_.size() != std::size_t(n) * n * n) throw DomainError("Christoffel array has the wrong size");
  if (scale_.empty()) scale_.assign(n, Poly());
  if (scale_.size() != std::size_t(n)) throw DomainError("scale form has the wrong size");
  init();
}

void Connection::init() {
  const int n = n_;
  const VarMask bm = base_mask(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Poly& g = gamma(i, j, k);
        if (!g.uses_only(bm))
          throw DomainError("Christoffel symbol " + idx_str(i, j, k) + " involves variables other than x1..x" +
                            std::to_string(n));
        if (g != gamma(j, i, k))
          throw DomainError("Christoffel symbols are not symmetric in (i,j) at " + idx_str(i, j, k));
        if (!g.is_zero()) zero_gamma_ = false;
      }
  for (const auto& t : scale_) {
    if (!t.uses_only(bm)) throw DomainError("scale form involves variables other than base coordinates");
    if (!t.is_zero()) scaled_ = true;
  }
  flat_ = zero_gamma_ && !scaled_;
  if (n == 1 && !zero_gamma_)
    throw DomainError("dimension 1 supports only the flat connection on the line");

  trace_.assign(n, Poly());
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < n; ++p) trace_[i] += gamma(i, p, p);

  auto cd = std::make_shared<CurvatureData>();
  cd->n = n;
  const std::size_t n2 = std::size_t(n) * n;
  cd->R.assign(n2 * n2, Poly());
  cd->Ric.assign(n2, Poly());
  cd->P.assign(n2, Poly());
  cd->B.assign(n2 * n2, Poly());
  cd->C.assign(n2 * n, Poly());
  if (zero_gamma_) {
    curv_ = std::move(cd);
    return;
  }
  auto R = [&](int i, int j, int k, int l) -> Poly& { return cd->R[((i * n + j) * n + k) * n + l]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Poly r = diff(gamma(j, k, l), var::x(i)) - diff(gamma(i, k, l), var::x(j));
          for (int q = 0; q < n; ++q) {
            r += gamma(i, q, l) * gamma(j, k, q);
            r -= gamma(j, q, l) * gamma(i, k, q);
          }
          R(i, j, k, l) = std::move(r);
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int p = 0; p < n; ++p) cd->Ric[i * n + j] += R(i, p, j, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (cd->Ric[i * n + j] != cd->Ric[j * n + i])
        throw DomainError("Ricci tensor is not symmetric (Ric_" + std::to_string(i + 1) + std::to_string(j + 1) +
                          " != Ric_" + std::to_string(j + 1) + std::to_string(i + 1) +
                          "); the connection preserves no volume form");
  if (n == 1) {
    curv_ = std::move(cd);
    return;
  }
  const Rat inv = Rat(1) / Rat(n - 1);
  for (std::size_t a = 0; a < n2; ++a) cd->P[a] = cd->Ric[a] * inv;
  auto P = [&](int i, int j) -> const Poly& { return cd->P[i * n + j]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Poly b = R(i, j, k, l);
          if (i == l) b += P(j, k);
          if (j == l) b -= P(i, k);
          cd->B[((i * n + j) * n + k) * n + l] = std::move(b);
        }
  // nabla_i P_jk = d_i P_jk - Gamma_ij^q P_qk - Gamma_ik^q P_jq.
  std::vector<Poly> dP(n2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Poly v = diff(P(j, k), var::x(i));
        for (int q = 0; q < n; ++q) {
          v -= gamma(i, j, q) * P(q, k);
          v -= gamma(i, k, q) * P(j, q);
        }
        dP[(i * n + j) * n + k] = std::move(v);
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        cd->C[(i * n + j) * n + k] = dP[(i * n + j) * n + k] - dP[(j * n + i) * n + k];
  curv_ = std::move(cd);
}

}  // namespace projstar
