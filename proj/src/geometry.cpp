#include "projstar/geometry.hpp"

namespace projstar {

Poly divergence_operator(const Poly& a, const Connection& conn, const Poly& weight) {
  const int n = conn.dim();
  Poly out;
  for (int i = 0; i < n; ++i) {
    Poly dz = diff(a, var::z(i));
    if (dz.is_zero()) continue;
    out += diff(dz, var::x(i));
    Poly coef = conn.trace(i);
    if (!weight.is_zero()) coef += weight * conn.scale_form(i);
    if (!coef.is_zero()) out += coef * dz;
    if (conn.christoffels_vanish()) continue;
    for (int j = 0; j < n; ++j) {
      Poly q;
      for (int k = 0; k < n; ++k)
        if (!conn.gamma(i, j, k).is_zero()) q += mul_var(conn.gamma(i, j, k), var::z(k));
      if (!q.is_zero()) out += q * diff(dz, var::z(j));
    }
  }
  return out;
}

SymTensorField divergence(const SymTensorField& a, const Connection& conn) {
  if (a.k == 0) throw DomainError("divergence of a density");
  Poly d = divergence_operator(a.body, conn, Poly(a.weight)) / Rat(a.k);
  return SymTensorField(a.n, a.k - 1, a.weight, std::move(d));
}

SymTensorField divergence(const SymTensorField& a, const Connection& conn, int times) {
  SymTensorField r = a;
  for (int i = 0; i < times; ++i) r = divergence(r, conn);
  return r;
}

Poly symbol_nabla(const Poly& a, int p, const Connection& conn, const Poly& weight) {
  const int n = conn.dim();
  Poly out = diff(a, var::x(p));
  if (!weight.is_zero() && conn.has_scale_form()) out += weight * conn.scale_form(p) * a;
  if (conn.christoffels_vanish()) return out;
  for (int j = 0; j < n; ++j) {
    Poly dz = diff(a, var::z(j));
    if (dz.is_zero()) continue;
    Poly q;
    for (int k = 0; k < n; ++k)
      if (!conn.gamma(p, j, k).is_zero()) q += mul_var(conn.gamma(p, j, k), var::z(k));
    if (!q.is_zero()) out += q * dz;
  }
  return out;
}

SymTensorField schouten_bracket(const SymTensorField& a, const SymTensorField& b, const Connection& conn) {
  if (!is_zero(a.weight) || !is_zero(b.weight)) throw DomainError("Schouten bracket needs weight-zero arguments");
  if (a.n != b.n || a.n != conn.dim()) throw DomainError("dimension mismatch");
  Poly out;
  for (int p = 0; p < a.n; ++p) {
    Poly da = diff(a.body, var::z(p));
    Poly db = diff(b.body, var::z(p));
    if (!da.is_zero()) out += da * symbol_nabla(b.body, p, conn);
    if (!db.is_zero()) out -= db * symbol_nabla(a.body, p, conn);
  }
  const int k = a.k + b.k - 1;
  if (k < 0) return SymTensorField(a.n, 0, 0, Poly());
  return SymTensorField(a.n, k, 0, std::move(out));
}

Poly poisson_bracket(const Poly& a, const Poly& b) {
  Poly out;
  for (int i = 0; i < kMaxDim; ++i) {
    Poly da = diff(a, var::z(i));
    Poly db = diff(b, var::z(i));
    if (!da.is_zero()) out += da * diff(b, var::x(i));
    if (!db.is_zero()) out -= db * diff(a, var::x(i));
  }
  return out;
}

Connection projective_change(const Connection& conn, const std::vector<Poly>& g) {
  const int n = conn.dim();
  if (static_cast<int>(g.size()) != n) throw DomainError("covector has the wrong length");
  std::vector<Poly> gamma = conn.gammas();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      gamma[(i * n + j) * n + j] += g[i];
      gamma[(i * n + j) * n + i] += g[j];
    }
  std::vector<Poly> tau = conn.scale_forms();
  for (int i = 0; i < n; ++i) tau[i] += g[i];
  return Connection(n, std::move(gamma), std::move(tau));
}

std::vector<Poly> exact_form(int n, const Poly& f) {
  std::vector<Poly> g(n);
  for (int i = 0; i < n; ++i) g[i] = diff(f, var::x(i));
  return g;
}

namespace {

/// Sum over the six permutations of the first three slots with signs.
Tensor skew3(const Tensor& t) {
  static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  Tensor out(t.dim(), t.slots(), t.weight());
  for (int s = 0; s < 6; ++s) {
    std::vector<int> perm(t.rank());
    for (int j = 0; j < t.rank(); ++j) perm[j] = j < 3 ? perms[s][j] : j;
    Tensor p = permute(t, perm);
    if (s < 3)
      out += p;
    else
      out -= p;
  }
  return out;
}

}  // namespace

std::vector<IdentityReport> bianchi_check(const Connection& conn) {
  const int n = conn.dim();
  std::vector<IdentityReport> rep;
  if (n < 2) {
    rep.push_back({"weyl-cotton", true});
    rep.push_back({"cotton-trace", true});
    rep.push_back({"schouten-skew", true});
    return rep;
  }
  const auto& cd = conn.curvature();
  Tensor B(n, "dddu"), C(n, "ddd"), P = schouten_tensor(conn);
  for (std::size_t i = 0; i < B.size(); ++i) B.flat(i) = cd.B[i];
  for (std::size_t i = 0; i < C.size(); ++i) C.flat(i) = cd.C[i];

  // nabla_[i B_jk]l^p = -delta_[i^p C_jk]l
  Tensor lhs = skew3(nabla(B, conn));
  Tensor rhs_full(n, "ddddu");
  for (std::size_t a = 0; a < rhs_full.size(); ++a) {
    auto idx = rhs_full.unflatten(a);
    if (idx[0] == idx[4]) rhs_full.flat(a) = -C.at({idx[1], idx[2], idx[3]});
  }
  rep.push_back({"weyl-cotton", lhs == skew3(rhs_full)});

  // (2-n) C_ijk = nabla_p B_ijk^p
  Tensor db = contract(nabla(B, conn), 0, 4);
  rep.push_back({"cotton-trace", db == C * Poly(2 - n)});

  rep.push_back({"schouten-skew", skew3(nabla(P, conn)).is_zero()});
  return rep;
}

Tensor lie_derivative_connection(const Poly& x, const Connection& conn) {
  const int n = conn.dim();
  std::vector<Poly> X(n);
  for (int k = 0; k < n; ++k) X[k] = diff(x, var::z(k));
  Tensor q(n, "ddu");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Poly v = diff(diff(X[k], var::x(i)), var::x(j));
        for (int p = 0; p < n; ++p) {
          v += X[p] * diff(conn.gamma(i, j, k), var::x(p));
          v -= conn.gamma(i, j, p) * diff(X[k], var::x(p));
          v += conn.gamma(p, j, k) * diff(X[p], var::x(i));
          v += conn.gamma(i, p, k) * diff(X[p], var::x(j));
        }
        q.at({i, j, k}) = std::move(v);
      }
  return q;
}

Tensor trace_free_part(const Tensor& q) {
  const int n = q.dim();
  Tensor tr = contract(q, 1, 2);
  Tensor out = q;
  const Rat c = Rat(1) / Rat(n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        out.at({i, j, i}) -= (tr.at({j}) + tr.at({i})) * c;
      } else {
        out.at({i, j, i}) -= tr.at({j}) * c;
        out.at({i, j, j}) -= tr.at({i}) * c;
      }
    }
  return out;
}

bool is_projective_automorphism(const Poly& x, const Connection& conn) {
  return trace_free_part(lie_derivative_connection(x, conn)).is_zero();
}

}  // namespace projstar
