#include "projstar/ambient.hpp"

#include <string>

#include "projstar/geometry.hpp"

namespace projstar {

namespace {

Poly p_contract(const Poly& a, const Connection& conn) {
  const int n = conn.dim();
  Poly out;
  if (a.is_zero()) return out;
  for (int p = 0; p < n; ++p) {
    Poly dp = diff(a, var::z(p));
    if (dp.is_zero()) continue;
    for (int q = 0; q < n; ++q) {
      const Poly& P = conn.schouten(p, q);
      if (!P.is_zero()) out += P * diff(dp, var::z(q));
    }
  }
  return out;
}

/// Frame derivative of a coefficient: d_i + weight tau_i (+ d_i symbol).
Poly frame_derivative(const Poly& t, int i, const Connection& conn, const Poly& weight, bool plane_wave) {
  Poly out = diff(t, var::x(i));
  if (!weight.is_zero() && conn.has_scale_form() && !conn.scale_form(i).is_zero())
    out += weight * conn.scale_form(i) * t;
  if (plane_wave) out += mul_var(t, var::d(i));
  return out;
}

/// Multiplies each term by its degree in z.
Poly z_euler(const Poly& p) {
  return map_terms(p, [](const Mono& m, const Rat& c, PolyBuilder& b) {
    int d = m.deg_in(mask::kZ);
    if (d != 0) b.add(m, c * d);
  });
}

std::string excluded_message(int n, int k, const Rat& w) {
  Rat m = Rat(-n - k) - w;
  std::string s = "weight " + to_string(w) + " is excluded for valence " + std::to_string(k) + " in dimension " +
                  std::to_string(n) + "; the invariant operator of order " + to_string(Rat(k) - m) +
                  " (the " + to_string(Rat(k) - m) + "-fold divergence plus curvature corrections) is defined instead";
  return s;
}

}  // namespace

SymTensorField AmbientSymTensor::component(int m) const {
  if (m < 0 || m > k) throw DomainError("component index out of range");
  return SymTensorField(n, m, weight, coeff_of(body, var::kW, k - m));
}

AmbientSymTensor ambient_from_components(const std::vector<SymTensorField>& comps) {
  if (comps.empty()) throw DomainError("no components");
  AmbientSymTensor t;
  t.n = comps[0].n;
  t.k = static_cast<int>(comps.size()) - 1;
  t.weight = comps[0].weight;
  for (int m = 0; m <= t.k; ++m) {
    if (comps[m].k != m || comps[m].weight != t.weight) throw DomainError("inconsistent ambient components");
    t.body += mul_var(comps[m].body, var::kW, t.k - m);
  }
  return t;
}

bool is_excluded_weight(int n, int k, const Rat& weight) {
  if (k == 0 || !is_integer(weight)) return false;
  Rat hi = Rat(-n - k), lo = Rat(-n - 2 * k + 1);
  return weight <= hi && weight >= lo;
}

Poly ambient_nabla(const Poly& body, int c, const Connection& conn, const Poly& weight, bool plane_wave) {
  const int n = conn.dim();
  if (c < 0) {
    Poly out = weight * body;
    out += map_terms(body, [](const Mono& m, const Rat& co, PolyBuilder& b) {
      int d = m.deg_in(mask::kFiber);
      if (d != 0) b.add(m, co * d);
    });
    return out;
  }
  Poly out = frame_derivative(body, c, conn, weight, plane_wave);
  for (int j = 0; j < n; ++j) {
    Poly dz = diff(body, var::z(j));
    if (dz.is_zero()) continue;
    Poly q;
    for (int k = 0; k < n; ++k)
      if (!conn.gamma(c, j, k).is_zero()) q += mul_var(conn.gamma(c, j, k), var::z(k));
    if (!conn.schouten(c, j).is_zero()) q += mul_var(conn.schouten(c, j), var::kW);
    if (!q.is_zero()) out += q * dz;
  }
  out += mul_var(diff(body, var::kW), var::z(c));
  return out;
}

Poly ambient_D(const Poly& body, const Connection& conn, const Poly& weight, bool plane_wave) {
  const int n = conn.dim();
  Poly out;
  std::vector<Poly> dz(n);
  for (int i = 0; i < n; ++i) dz[i] = diff(body, var::z(i));
  for (int i = 0; i < n; ++i) {
    if (dz[i].is_zero()) continue;
    out += frame_derivative(dz[i], i, conn, weight, plane_wave);
    if (!conn.trace(i).is_zero()) out += conn.trace(i) * dz[i];
    for (int j = 0; j < n; ++j) {
      Poly q;
      for (int k = 0; k < n; ++k)
        if (!conn.gamma(i, j, k).is_zero()) q += mul_var(conn.gamma(i, j, k), var::z(k));
      if (!conn.schouten(i, j).is_zero()) q += mul_var(conn.schouten(i, j), var::kW);
      if (q.is_zero()) continue;
      Poly dzz = diff(dz[i], var::z(j));
      if (!dzz.is_zero()) out += q * dzz;
    }
  }
  Poly dw = diff(body, var::kW);
  if (!dw.is_zero()) {
    const int k = body.degree_in(mask::kFiber);
    out += dw * (weight + Poly(n + k));
    out += z_euler(dw);
  }
  return out;
}

AmbientSymTensor ambient_trace_div(const AmbientSymTensor& t, const Connection& conn) {
  if (t.k < 1) throw DomainError("trace-divergence of a valence-0 tensor");
  Poly d = ambient_D(t.body, conn, Poly(t.weight)) / Rat(t.k);
  return AmbientSymTensor{t.n, t.k - 1, t.weight, std::move(d)};
}

AmbientSymTensor invariant_lift(const SymTensorField& a, const Connection& conn) {
  const int n = a.n, k = a.k;
  if (n != conn.dim()) throw DomainError("dimension mismatch");
  if (is_excluded_weight(n, k, a.weight)) throw ExcludedWeight(excluded_message(n, k, a.weight));
  std::vector<Poly> comp(k + 2);
  comp[k] = a.body;
  const Poly lam(a.weight);
  for (int m = k; m >= 1; --m) {
    Poly v = divergence_operator(comp[m], conn, lam);
    v += p_contract(comp[m + 1], conn);
    Rat den = Rat(k - m + 1) * (a.weight + Rat(n + k + m - 1));
    comp[m - 1] = v * (Rat(-1) / den);
  }
  AmbientSymTensor t{n, k, a.weight, Poly()};
  for (int m = 0; m <= k; ++m) t.body += mul_var(comp[m], var::kW, k - m);
  return t;
}

AmbientSymTensor flat_lift_closed_form(const SymTensorField& a, const Connection& conn) {
  const int n = a.n, k = a.k;
  for (const auto& r : conn.curvature().Ric)
    if (!r.is_zero()) throw DomainError("closed-form lift needs a Ricci-flat representative");
  if (is_excluded_weight(n, k, a.weight)) throw ExcludedWeight(excluded_message(n, k, a.weight));
  AmbientSymTensor t{n, k, a.weight, Poly()};
  SymTensorField d = a;
  for (int m = 0; m <= k; ++m) {
    if (m > 0) d = divergence(d, conn);
    Rat c = binomial(Rat(k), m) / falling_factorial(a.weight + Rat(n + 2 * k - 1), m);
    if (m % 2) c = -c;
    t.body += mul_var(d.body * c, var::kW, m);
  }
  return t;
}

SymTensorField excluded_weight_operator(const SymTensorField& a, const Connection& conn) {
  const int n = a.n, k = a.k;
  if (!is_excluded_weight(n, k, a.weight))
    throw DomainError("weight " + to_string(a.weight) + " is not excluded for valence " + std::to_string(k));
  const Rat m0r = Rat(-n - k) - a.weight;
  const int m0 = static_cast<int>(m0r.get_num().get_si());
  std::vector<Poly> comp(k + 2);
  comp[k] = a.body;
  const Poly lam(a.weight);
  Rat lead = 1;
  for (int m = k; m >= m0 + 2; --m) {
    Poly v = divergence_operator(comp[m], conn, lam);
    v += p_contract(comp[m + 1], conn);
    Rat den = Rat(k - m + 1) * (a.weight + Rat(n + k + m - 1));
    comp[m - 1] = v * (Rat(-1) / den);
    lead *= Rat(-m) / den;
  }
  Poly raw = divergence_operator(comp[m0 + 1], conn, lam) + p_contract(comp[m0 + 2], conn);
  lead *= Rat(m0 + 1);
  return SymTensorField(n, m0, a.weight, raw / lead);
}

AmbientSymTensor ambient_sym_product(const AmbientSymTensor& a, const AmbientSymTensor& b) {
  if (a.n != b.n) throw DomainError("dimension mismatch");
  return AmbientSymTensor{a.n, a.k + b.k, a.weight + b.weight, a.body * b.body};
}

AmbientSymTensor pad_euler(const AmbientSymTensor& a, int s) {
  return AmbientSymTensor{a.n, a.k + s, a.weight, mul_var(a.body, var::kW, s)};
}

std::vector<Poly> ambient_density_jet(const Poly& f, const Poly& weight, const Connection& conn, int r,
                                      bool plane_wave, int max_order) {
  if (r > max_order) throw DomainError("jet order " + std::to_string(r) + " exceeds the configured maximum");
  const int n = conn.dim();
  // G^k = Gamma_ij^k eta^i eta^j, Pq = P_ij eta^i eta^j.
  std::vector<Poly> G(n);
  Poly Pq;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mono m;
      m.set(var::z(i), 1);
      m.set(var::z(j), m[var::z(j)] + 1);
      for (int k = 0; k < n; ++k)
        if (!conn.gamma(i, j, k).is_zero()) G[k].add_scaled(conn.gamma(i, j, k), 1, m);
      if (!conn.schouten(i, j).is_zero()) Pq.add_scaled(conn.schouten(i, j), 1, m);
    }
  std::vector<Poly> J;
  J.reserve(r + 1);
  J.push_back(plane_wave ? Poly(1) : f);
  for (int s = 0; s < r; ++s) {
    const Poly& cur = J.back();
    Poly nxt;
    for (int i = 0; i < n; ++i) nxt += mul_var(frame_derivative(cur, i, conn, weight, plane_wave), var::z(i));
    for (int k = 0; k < n; ++k)
      if (!G[k].is_zero()) nxt -= G[k] * diff(cur, var::z(k));
    if (!Pq.is_zero()) nxt -= Pq * diff(cur, var::kW);
    nxt -= mul_var(z_euler(cur), var::kW);
    nxt += mul_var(cur * (weight - Poly(s)), var::kW);
    J.push_back(std::move(nxt));
  }
  return J;
}

Poly contract_symbols(const Poly& t, const Poly& j, int k) {
  auto st = split(t, mask::kFiber);
  auto sj = split(j, mask::kFiber);
  Poly out;
  std::size_t b = 0;
  for (const auto& [m, c] : st) {
    while (b < sj.size() && sj[b].first > m) ++b;
    if (b == sj.size()) break;
    if (sj[b].first != m) continue;
    Rat mult = 1;
    for (int v = var::kZ; v <= var::kW; ++v) mult *= factorial(m[v]);
    out += c * sj[b].second * mult;
  }
  return out / factorial(k);
}

Poly horizontal_part(const Poly& body) { return substitute(body, var::kW, Poly()); }

}  // namespace projstar
