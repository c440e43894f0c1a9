#include "projstar/diffop.hpp"

#include <functional>

namespace projstar {

namespace {

/// Applies d^alpha (alpha read from the d-exponents of m) in the x variables.
Poly derive(const Poly& f, const Mono& m) {
  Poly r = f;
  for (int i = 0; i < kMaxDim && !r.is_zero(); ++i)
    for (int e = 0; e < m[var::d(i)]; ++e) r = diff(r, var::x(i));
  return r;
}

}  // namespace

DensityDiffOp DensityDiffOp::identity(int n, const Poly& source) { return DensityDiffOp{n, source, 0, Poly(1)}; }

Poly apply(const DensityDiffOp& op, const Poly& f) {
  Poly out;
  for (const auto& [m, c] : split(op.symbol, mask::kD)) {
    Poly d = derive(f, m);
    if (!d.is_zero()) out += c * d;
  }
  return out;
}

Poly compose_symbols(const Poly& a, const Poly& b) {
  int deg[kMaxDim];
  for (int i = 0; i < kMaxDim; ++i) deg[i] = a.degree(var::d(i));
  Poly out;
  // Recursive enumeration of gamma; da = d_d^gamma a / gamma!, db = d_x^gamma b.
  std::function<void(int, const Poly&, const Poly&)> rec = [&](int i, const Poly& da, const Poly& db) {
    if (da.is_zero() || db.is_zero()) return;
    if (i == kMaxDim) {
      out += da * db;
      return;
    }
    Poly ca = da, cb = db;
    for (int g = 0;; ++g) {
      rec(i + 1, ca, cb);
      if (g == deg[i]) break;
      ca = diff(ca, var::d(i)) / Rat(g + 1);
      cb = diff(cb, var::x(i));
      if (ca.is_zero() || cb.is_zero()) break;
    }
  };
  rec(0, a, b);
  return out;
}

DensityDiffOp compose(const DensityDiffOp& a, const DensityDiffOp& b) {
  if (a.n != b.n) throw DomainError("dimension mismatch");
  if (a.source != b.source + Poly(b.shift)) throw DomainError("composition weight mismatch");
  return DensityDiffOp{a.n, b.source, a.shift + b.shift, compose_symbols(a.symbol, b.symbol)};
}

Poly principal_symbol(const Poly& symbol) {
  if (symbol.is_zero()) return symbol;
  const int k = symbol.degree_in(mask::kD);
  Poly top = homogeneous_part(symbol, mask::kD, k);
  std::vector<int> from, to;
  for (int i = 0; i < kMaxDim; ++i) {
    from.push_back(var::d(i));
    to.push_back(var::z(i));
  }
  return rename(top, from, to);
}

Poly adjoint_symbol(const Poly& symbol) {
  Poly out;
  for (const auto& [m, c] : split(symbol, mask::kD)) {
    Poly t = compose_symbols(Poly::monomial(m, 1), c);
    if (m.deg_in(mask::kD) % 2)
      out -= t;
    else
      out += t;
  }
  return out;
}

DensityDiffOp formal_adjoint(const DensityDiffOp& op) {
  const Poly mu = Poly::variable(var::kMu);
  Poly target = Poly(Rat(-op.n - 1) - op.shift) - op.source;
  Poly sym = adjoint_symbol(op.symbol);
  if (!op.source.is_constant()) {
    if (op.source != mu) throw DomainError("formal adjoint supports a rational or formal source weight only");
    // Coefficients are functions of the original source mu = -n-1-shift-mu'.
    sym = substitute(sym, var::kMu, Poly(Rat(-op.n - 1) - op.shift) - mu);
    target = mu;
  }
  return DensityDiffOp{op.n, target, op.shift, std::move(sym)};
}

std::vector<Poly> adjoint_potential(int n, const Poly& symbol, const Poly& u, const Poly& v) {
  std::vector<Poly> J(n);
  for (const auto& [m, c] : split(symbol, mask::kD)) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < m[var::d(i)]; ++e) idx.push_back(i);
    const int len = static_cast<int>(idx.size());
    // A_j = d_{idx[j]} ... d_{idx[len-1]} u, h_0 = c v, h_{j+1} = -d_{idx[j]} h_j.
    std::vector<Poly> A(len + 1);
    A[len] = u;
    for (int j = len - 1; j >= 0; --j) A[j] = diff(A[j + 1], var::x(idx[j]));
    Poly h = c * v;
    for (int j = 0; j < len; ++j) {
      J[idx[j]] += A[j + 1] * h;
      h = -diff(h, var::x(idx[j]));
    }
  }
  return J;
}

}  // namespace projstar
