#include "projstar/multilinear.hpp"

#include <algorithm>
#include <string>

namespace projstar {

namespace {

void check_args(const std::vector<SymTensorField>& args, const Connection& conn) {
  if (args.empty()) throw DomainError("no arguments");
  for (const auto& a : args)
    if (a.n != conn.dim()) throw DomainError("dimension mismatch");
}

int total_valence(const std::vector<SymTensorField>& args) {
  int K = 0;
  for (const auto& a : args) K += a.k;
  return K;
}

Rat total_weight(const std::vector<SymTensorField>& args) {
  Rat L = 0;
  for (const auto& a : args) L += a.weight;
  return L;
}

SymTensorField direct_l_beta(const std::vector<SymTensorField>& args, int beta, const Connection& conn) {
  AmbientSymTensor t = lift_product(args, conn);
  const int K = t.k;
  Poly body = t.body;
  const Poly w(t.weight);
  for (int s = 0; s < K - beta; ++s) body = ambient_D(body, conn, w);
  body = horizontal_part(body) / falling_factorial(Rat(K), K - beta);
  return SymTensorField(t.n, beta, t.weight, std::move(body));
}

bool peel_admissible(int n, int K, const Rat& w) {
  for (int s = 0; s < K; ++s)
    if (is_excluded_weight(n, K - s, w)) return false;
  return true;
}

}  // namespace

AmbientSymTensor lift_product(const std::vector<SymTensorField>& args, const Connection& conn) {
  check_args(args, conn);
  AmbientSymTensor t = invariant_lift(args[0], conn);
  for (std::size_t i = 1; i < args.size(); ++i) t = ambient_sym_product(t, invariant_lift(args[i], conn));
  return t;
}

SymTensorField l_beta(const std::vector<SymTensorField>& args, int beta, const Connection& conn, LBetaMethod method) {
  check_args(args, conn);
  const int K = total_valence(args);
  if (beta < 0 || beta > K) throw DomainError("beta must lie between 0 and the total valence");
  if (method == LBetaMethod::Auto) {
    method = (args.size() > 2 && peel_admissible(conn.dim(), K, total_weight(args))) ? LBetaMethod::Peel
                                                                                      : LBetaMethod::Direct;
  }
  if (method == LBetaMethod::Direct) return direct_l_beta(args, beta, conn);
  return peel_decompose(args, conn).l(beta);
}

SymTensorField PeelDecomposition::l(int beta) const {
  const int s = K - beta;
  if (s < 0 || s > K) throw DomainError("beta out of range");
  Rat c = falling_factorial(weight + Rat(n + 2 * K - s), s) / binomial(Rat(K), s);
  return SymTensorField(n, beta, weight, u[s].body * c);
}

PeelDecomposition peel_decompose(const std::vector<SymTensorField>& args, const Connection& conn) {
  AmbientSymTensor r = lift_product(args, conn);
  PeelDecomposition pd;
  pd.n = r.n;
  pd.K = r.k;
  pd.weight = r.weight;
  for (int s = 0; s <= pd.K; ++s) {
    SymTensorField us(r.n, pd.K - s, r.weight, horizontal_part(r.body));
    Poly rest = r.body;
    if (!us.body.is_zero()) {
      if (is_excluded_weight(r.n, us.k, r.weight))
        throw ExcludedWeight("weight " + to_string(r.weight) + " of the partial product is excluded for valence " +
                             std::to_string(us.k) + "; use the direct method");
      rest -= invariant_lift(us, conn).body;
    }
    pd.u.push_back(std::move(us));
    if (s == pd.K) {
      if (!rest.is_zero()) throw Error("peel left a nonzero remainder");
      break;
    }
    PolyBuilder b;
    for (const auto& [m, c] : rest.terms()) {
      if (m[var::kW] == 0) throw Error("peel remainder is not divisible by the Euler slot");
      Mono q = m;
      q.set(var::kW, m[var::kW] - 1);
      b.add(q, c);
    }
    r = AmbientSymTensor{r.n, r.k - 1, r.weight, b.build()};
  }
  return pd;
}

Poly quantize_pair(const SymTensorField& a, const Poly& f, const Poly& mu, const Connection& conn) {
  AmbientSymTensor t = invariant_lift(a, conn);
  auto J = ambient_density_jet(f, mu, conn, a.k, false, std::max(a.k, kDefaultMaxOrder));
  return contract_symbols(t.body, J[a.k], a.k);
}

Poly quantize_symbol(const SymTensorField& a, const Poly& mu, const Connection& conn) {
  return quantize_symbol(a, plane_wave_jet(mu, conn, a.k), conn);
}

Poly quantize_symbol(const SymTensorField& a, const std::vector<Poly>& jet, const Connection& conn) {
  if (static_cast<int>(jet.size()) <= a.k) throw DomainError("plane-wave jet too short");
  AmbientSymTensor t = invariant_lift(a, conn);
  return contract_symbols(t.body, jet[a.k], a.k);
}

std::vector<Poly> plane_wave_jet(const Poly& mu, const Connection& conn, int order) {
  return ambient_density_jet(Poly(1), mu, conn, order, true, std::max(order, kDefaultMaxOrder));
}

SymTensorField weighted_pairing(const SymTensorField& a, const SymTensorField& b, const Connection& conn) {
  if (a.n != b.n || a.n != conn.dim()) throw DomainError("dimension mismatch");
  AmbientSymTensor A = invariant_lift(a, conn), B = invariant_lift(b, conn);
  const Poly wa(a.weight), wb(b.weight);
  Poly out;
  for (int c = -1; c < a.n; ++c) {
    const int v = c < 0 ? var::kW : var::z(c);
    Poly da = diff(A.body, v), db = diff(B.body, v);
    if (!da.is_zero()) out += da * ambient_nabla(B.body, c, conn, wb);
    if (!db.is_zero()) out -= db * ambient_nabla(A.body, c, conn, wa);
  }
  const int k = a.k + b.k - 1;
  if (k < 0) return SymTensorField(a.n, 0, a.weight + b.weight, Poly());
  return SymTensorField(a.n, k, a.weight + b.weight, horizontal_part(out));
}

Poly covariant_symbol_nabla(const Poly& s, int i, const Connection& conn, const Poly& weight) {
  const int n = conn.dim();
  Poly out = diff(s, var::x(i));
  if (!weight.is_zero() && conn.has_scale_form()) out += weight * conn.scale_form(i) * s;
  if (conn.christoffels_vanish()) return out;
  for (int k = 0; k < n; ++k) {
    Poly dk = diff(s, var::z(k));
    if (dk.is_zero()) continue;
    Poly g;
    for (int j = 0; j < n; ++j)
      if (!conn.gamma(i, j, k).is_zero()) g += mul_var(conn.gamma(i, j, k), var::z(j));
    if (!g.is_zero()) out -= g * dk;
  }
  return out;
}

Poly symmetric_jet_operator(const Poly& u, const Poly& weight, int order, const Connection& conn) {
  const int n = conn.dim();
  Poly Pq;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (conn.schouten(i, j).is_zero()) continue;
      Mono m;
      m.set(var::z(i), 1);
      m.set(var::z(j), m[var::z(j)] + 1);
      Pq.add_scaled(conn.schouten(i, j), 1, m);
    }
  Poly prev, cur = u;
  for (int r = 0; r < order; ++r) {
    Poly next;
    for (int i = 0; i < n; ++i) next += mul_var(covariant_symbol_nabla(cur, i, conn, weight), var::z(i));
    if (r >= 1 && !Pq.is_zero()) next += Pq * prev * (Poly(r) * (Poly(r - 1) - weight));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly invariant_operator_L(const DensityField& u, int k, const Connection& conn) {
  if (u.weight != Poly(k)) throw DomainError("the invariant operator needs a density of weight " + std::to_string(k));
  return symmetric_jet_operator(u.value, u.weight, k + 1, conn);
}

}  // namespace projstar
