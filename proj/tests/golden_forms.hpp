/**
 * @file golden_forms.hpp
 * @brief Hand-transcribed closed forms for lifts, invariant operators and
 *        low-order star products, written with explicit covariant
 *        derivatives and index contractions.
 *
 * Each form is evaluated on concrete inputs and compared with the engine.
 */
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "projstar/ambient.hpp"
#include "projstar/geometry.hpp"
#include "projstar/multilinear.hpp"
#include "projstar/random.hpp"
#include "projstar/starprod.hpp"
#include "projstar/tensor.hpp"

namespace golden {

using namespace projstar;

struct Outcome {
  bool ok = true;
  int cases = 0;
  std::string failure;

  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      failure = what;
    }
  }
};

/// Curved test connection with non-zero Schouten tensor and, for n >= 3,
/// non-zero Weyl tensor.
inline Connection curved(int n) {
  std::vector<Poly> g(n * n * n);
  auto set = [&](int i, int j, int k, const char* s) {
    g[(i * n + j) * n + k] = parse_poly(s);
    g[(j * n + i) * n + k] = parse_poly(s);
  };
  set(0, 0, 1, "x2 + 1/2");
  set(0, 1, 0, "x1^2");
  set(1, 1, 0, "-x1*x2");
  if (n >= 3) {
    set(0, 2, 1, "x3");
    set(2, 2, 0, "x1 + x2");
  }
  return Connection(n, remove_trace(n, g));
}

inline std::vector<std::pair<std::string, Connection>> structures(int n) {
  return {{"flat", Connection(n)}, {"curved", curved(n)}};
}

inline Poly sum_range(int n, const std::function<Poly(int)>& f) {
  Poly s;
  for (int i = 0; i < n; ++i) s += f(i);
  return s;
}

/// Body of the contraction a^{..pq} P_pq for a valence-k body.
inline Poly contract_p(const Poly& body, int k, const Connection& conn) {
  const int n = conn.dim();
  Poly s;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) s += conn.schouten(p, q) * diff(diff(body, var::z(p)), var::z(q));
  return s / Rat(k * (k - 1));
}

/// Body of the symmetrization of a^{p..} nabla_p b^{..} summed over p,
/// multiplied by the valence of a.
inline Poly transvect(const Poly& a, const Poly& b, const Rat& weight_b, const Connection& conn) {
  return sum_range(conn.dim(),
                   [&](int p) { return diff(a, var::z(p)) * symbol_nabla(b, p, conn, Poly(weight_b)); });
}

inline Poly div(const SymTensorField& a, const Connection& conn, int times = 1) {
  return divergence(a, conn, times).body;
}

inline Rat ff(const Rat& a, int r) { return falling_factorial(a, r); }

// ------------------------------------------------------------------ lifts

inline Outcome lift_valence_one(int n, RandomSource& rs) {
  Outcome o;
  for (auto& [name, conn] : structures(n)) {
    for (const Rat& lambda : {Rat(0), make_rat(1, 2), Rat(-1)}) {
      SymTensorField a = rs.field(n, 1, lambda, 3);
      Tensor na = nabla(to_tensor(a), conn);
      Poly trace = sum_range(n, [&](int p) { return na.at({p, p}); });
      Poly expected = trace * (Rat(-1) / (lambda + Rat(n + 1)));
      o.expect(invariant_lift(a, conn).component(0).body == expected, name + " k=1 lambda=" + to_string(lambda));
    }
  }
  return o;
}

inline Outcome lift_valence_two(int n, RandomSource& rs) {
  Outcome o;
  for (auto& [name, conn] : structures(n)) {
    for (const Rat& lambda : {Rat(0), make_rat(2, 3), Rat(-1)}) {
      SymTensorField a = rs.field(n, 2, lambda, 3);
      const Rat A = lambda + Rat(n);
      AmbientSymTensor lift = invariant_lift(a, conn);
      Poly a1 = div(a, conn) * (Rat(-2) / (A + 3));
      Poly a0 = div(a, conn, 2) / ff(A + 3, 2) - contract_p(a.body, 2, conn) / (A + 2);
      o.expect(lift.component(1).body == a1, name + " k=2 a_1");
      o.expect(lift.component(0).body == a0, name + " k=2 a_0");
    }
  }
  return o;
}

/// Valence-three lift. The coefficient of P_qr nabla_p a^{pqr} in a_0 is
/// (3A + 13) / ((A+3)(A+4)(A+5)), the value produced by the recursion
/// relating consecutive components.
inline Outcome lift_valence_three(int n, RandomSource& rs) {
  Outcome o;
  for (auto& [name, conn] : structures(n)) {
    for (const Rat& lambda : {Rat(0), make_rat(-1, 2)}) {
      SymTensorField a = rs.field(n, 3, lambda, 3);
      const Rat A = lambda + Rat(n);
      AmbientSymTensor lift = invariant_lift(a, conn);
      Poly a2 = div(a, conn) * (Rat(-3) / (A + 5));
      Poly a1 = div(a, conn, 2) * (Rat(3) / ff(A + 5, 2)) - contract_p(a.body, 3, conn) * (Rat(3) / (A + 4));
      // a^{pqr} nabla_p P_qr and P_qr nabla_p a^{pqr}.
      Tensor np = nabla(schouten_tensor(conn), conn);
      Poly a_np;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          for (int r = 0; r < n; ++r) a_np += a.component({p, q, r}) * np.at({p, q, r});
      Poly p_da = contract_p(div(a, conn), 2, conn);
      Poly a0 = div(a, conn, 3) * (Rat(-1) / ff(A + 5, 3)) + a_np / ff(A + 4, 2) +
                p_da * ((3 * A + 13) / ((A + 3) * (A + 4) * (A + 5)));
      o.expect(lift.component(2).body == a2, name + " k=3 a_2");
      o.expect(lift.component(1).body == a1, name + " k=3 a_1");
      o.expect(lift.component(0).body == a0, name + " k=3 a_0");
    }
  }
  return o;
}

/// Invariant operators at the excluded weights for valence at most three.
inline Outcome excluded_operators(int n, RandomSource& rs) {
  Outcome o;
  for (auto& [name, conn] : structures(n)) {
    auto check = [&](int k, int shift, const std::function<Poly(const SymTensorField&)>& form) {
      SymTensorField a = rs.field(n, k, Rat(-n - shift), 3);
      o.expect(excluded_weight_operator(a, conn).body == form(a),
               name + " k=" + std::to_string(k) + " weight=-n-" + std::to_string(shift));
    };
    check(1, 1, [&](const SymTensorField& a) { return div(a, conn); });
    check(2, 3, [&](const SymTensorField& a) { return div(a, conn); });
    check(2, 2, [&](const SymTensorField& a) { return div(a, conn, 2) - contract_p(a.body, 2, conn); });
    check(3, 5, [&](const SymTensorField& a) { return div(a, conn); });
    check(3, 4, [&](const SymTensorField& a) { return div(a, conn, 2) - contract_p(a.body, 3, conn); });
    check(3, 3, [&](const SymTensorField& a) {
      Tensor np = nabla(schouten_tensor(conn), conn);
      Poly a_np;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          for (int r = 0; r < n; ++r) a_np += a.component({p, q, r}) * np.at({p, q, r});
      return div(a, conn, 3) - contract_p(div(a, conn), 2, conn) * Rat(4) - a_np * Rat(2);
    });
  }
  return o;
}

// ------------------------------------------------------------------ L_beta

/// L_{K-1}(a1, a2) in body form.
inline Poly l_k_minus_one(const SymTensorField& a1, const SymTensorField& a2, const Connection& conn) {
  const int n = conn.dim(), k1 = a1.k, k2 = a2.k, K = k1 + k2;
  const Rat &l1 = a1.weight, &l2 = a2.weight;
  Poly out = (transvect(a1.body, a2.body, l2, conn) + transvect(a2.body, a1.body, l1, conn)) / Rat(K);
  if (k2 > 0) out -= a1.body * div(a2, conn) * (Rat(k2) * (l1 + 2 * k1) / (Rat(K) * (l2 + n + 2 * k2 - 1)));
  if (k1 > 0) out -= a2.body * div(a1, conn) * (Rat(k1) * (l2 + 2 * k2) / (Rat(K) * (l1 + n + 2 * k1 - 1)));
  return out;
}

inline Outcome l_k_minus_one_general(int n, RandomSource& rs) {
  Outcome o;
  for (auto& [name, conn] : structures(n))
    for (auto [k1, k2] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}, std::pair{3, 0}}) {
      SymTensorField a1 = rs.field(n, k1, make_rat(1, 3), 2), a2 = rs.field(n, k2, make_rat(-1, 2), 2);
      o.expect(l_beta({a1, a2}, k1 + k2 - 1, conn).body == l_k_minus_one(a1, a2, conn),
               name + " k1=" + std::to_string(k1) + " k2=" + std::to_string(k2));
    }
  return o;
}

/// Rows (s, 0) and (1, 1) of the L_{K-1} table, written out by components.
/// Row (1, 1) uses the denominators n + 1 + lambda of the general formula.
inline Outcome l_k_minus_one_table(int n, RandomSource& rs) {
  Outcome o;
  for (auto& [name, conn] : structures(n)) {
    const Rat l1 = make_rat(2, 5), l2 = make_rat(-3, 4);
    for (int s = 1; s <= 3; ++s) {
      SymTensorField a = rs.field(n, s, l1, 2);
      Poly b = rs.base_poly(n, 3);
      SymTensorField bs = SymTensorField::scalar(n, l2, b);
      Poly db_sum = sum_range(n, [&](int p) { return diff(a.body, var::z(p)) / Rat(s) * symbol_nabla(b, p, conn, Poly(l2)); });
      Poly expected = db_sum - b * div(a, conn) * (l2 / (Rat(n + 2 * s - 1) + l1));
      o.expect(l_beta({a, bs}, s - 1, conn).body == expected, name + " row (" + std::to_string(s) + ",0)");
    }
    SymTensorField a = rs.field(n, 1, l1, 2), b = rs.field(n, 1, l2, 2);
    Tensor na = nabla(to_tensor(a), conn), nb = nabla(to_tensor(b), conn);
    Poly diva = sum_range(n, [&](int p) { return na.at({p, p}); });
    Poly divb = sum_range(n, [&](int p) { return nb.at({p, p}); });
    Poly expected;
    for (int i = 0; i < n; ++i) {
      Poly ai = a.component({i}), bi = b.component({i});
      Poly c = sum_range(n, [&](int p) { return a.component({p}) * nb.at({p, i}) + b.component({p}) * na.at({p, i}); }) / Rat(2);
      c -= ai * divb * ((l1 + 2) / (Rat(2) * (Rat(n + 1) + l2)));
      c -= bi * diva * ((l2 + 2) / (Rat(2) * (Rat(n + 1) + l1)));
      expected += c * Poly::variable(var::z(i));
    }
    o.expect(l_beta({a, b}, 1, conn).body == expected, name + " row (1,1)");
  }
  return o;
}

/// L_0(a, f) for a symmetric two-tensor of weight lambda and f of weight mu.
inline Poly second_order(const SymTensorField& a, const Poly& f, const Rat& mu, const Connection& conn) {
  const int n = conn.dim();
  const Rat A = a.weight + Rat(n);
  Tensor ta = to_tensor(a), tf = to_tensor(n, DensityField{Poly(mu), f});
  Tensor nf = nabla(tf, conn), nnf = nabla(nf, conn), na = nabla(ta, conn), nna = nabla(na, conn);
  Poly t1, t2, t3, t4;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      t1 += ta.at({p, q}) * nnf.at({p, q});
      t2 += na.at({p, p, q}) * nf.at({q});
      t3 += nna.at({p, q, p, q});
      t4 += ta.at({p, q}) * conn.schouten(p, q);
    }
  return t1 + t2 * (Rat(2) * (1 - mu) / (A + 3)) + t3 * f * (ff(mu, 2) / ff(A + 3, 2)) -
         t4 * f * (mu * (a.weight + mu + n + 1) / (A + 2));
}

inline Outcome second_order_form(int n, RandomSource& rs) {
  Outcome o;
  for (auto& [name, conn] : structures(n))
    for (const Rat& lambda : {Rat(0), make_rat(1, 2)})
      for (const Rat& mu : {Rat(1), make_rat(-2, 3), Rat(3)}) {
        SymTensorField a = rs.field(n, 2, lambda, 2);
        Poly f = rs.base_poly(n, 3);
        o.expect(l_beta({a, SymTensorField::scalar(n, mu, f)}, 0, conn).body == second_order(a, f, mu, conn),
                 name + " lambda=" + to_string(lambda) + " mu=" + to_string(mu));
      }
  return o;
}

/// L_0(a, f) for a symmetric three-tensor of weight lambda and f of weight mu.
/// The coefficient of P_ij nabla_p a^{ijp} f carries the corrected valence-three
/// lift coefficient.
inline Poly third_order(const SymTensorField& a, const Poly& f, const Rat& mu, const Connection& conn) {
  const int n = conn.dim();
  const Rat A = a.weight + Rat(n);
  Tensor ta = to_tensor(a), tf = to_tensor(n, DensityField{Poly(mu), f});
  Tensor nf = nabla(tf, conn), nnf = nabla(nf, conn), nnnf = nabla(nnf, conn);
  Tensor na = nabla(ta, conn), nna = nabla(na, conn), nnna = nabla(nna, conn);
  Tensor np = nabla(schouten_tensor(conn), conn);
  Poly t1, t2, t3, t4, t5, t6, t7;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        t1 += ta.at({i, j, k}) * nnnf.at({i, j, k});
        t2 += na.at({k, i, j, k}) * nnf.at({i, j});                // (nabla_p a^{ijp}) nabla_i nabla_j f
        t3 += ta.at({i, j, k}) * conn.schouten(i, j) * nf.at({k});  // a^{ijk} P_ij nabla_k f
        t4 += nna.at({j, k, i, j, k}) * nf.at({i});                 // (nabla_p nabla_q a^{ipq}) nabla_i f
        t5 += nnna.at({i, j, k, i, j, k});                          // nabla_i nabla_j nabla_k a^{ijk}
        t6 += ta.at({i, j, k}) * np.at({i, j, k});                  // a^{ijk} nabla_i P_jk
        t7 += conn.schouten(i, j) * na.at({k, i, j, k});            // P_ij nabla_p a^{ijp}
      }
  const Rat m12 = ff(mu - 1, 2);
  Poly zeroth = t5 * (-ff(mu, 3) / ff(A + 5, 3)) + t6 * (mu * (m12 / ff(A + 4, 2) - 1)) +
                t7 * (ff(mu, 3) * (3 * A + 13) / ((A + 3) * (A + 4) * (A + 5)) + Rat(3) * mu * (mu - 2) / (A + 5));
  return t1 + t2 * (Rat(3) * (2 - mu) / (A + 5)) + t3 * ((2 - 3 * mu) - Rat(3) * m12 / (A + 4)) +
         t4 * (Rat(3) * m12 / ff(A + 5, 2)) + zeroth * f;
}

inline Outcome third_order_form(int n, RandomSource& rs) {
  Outcome o;
  for (auto& [name, conn] : structures(n))
    for (const Rat& lambda : {Rat(0), make_rat(-1, 3)})
      for (const Rat& mu : {Rat(2), make_rat(1, 2)}) {
        SymTensorField a = rs.field(n, 3, lambda, 2);
        Poly f = rs.base_poly(n, 4);
        o.expect(l_beta({a, SymTensorField::scalar(n, mu, f)}, 0, conn).body == third_order(a, f, mu, conn),
                 name + " lambda=" + to_string(lambda) + " mu=" + to_string(mu));
      }
  return o;
}

/// L_0(a, b) for vector fields a of weight mu and b of weight lambda.
inline Poly vector_pair(const SymTensorField& a, const SymTensorField& b, const Connection& conn) {
  const int n = conn.dim();
  const Rat &mu = a.weight, &lambda = b.weight;
  Tensor ta = to_tensor(a), tb = to_tensor(b);
  Tensor na = nabla(ta, conn), nb = nabla(tb, conn), nna = nabla(na, conn), nnb = nabla(nb, conn);
  Poly t1, t2, t3, diva, divb, t5;
  for (int p = 0; p < n; ++p) {
    diva += na.at({p, p});
    divb += nb.at({p, p});
    for (int q = 0; q < n; ++q) {
      t1 += na.at({p, q}) * nb.at({q, p});
      t2 += ta.at({p}) * nnb.at({p, q, q});
      t3 += tb.at({p}) * nna.at({p, q, q});
      t5 += ta.at({p}) * tb.at({q}) * conn.schouten(p, q);
    }
  }
  return t1 - t2 * ((mu + 1) / (lambda + n + 1)) - t3 * ((lambda + 1) / (mu + n + 1)) +
         diva * divb * ((mu * lambda - n - 1) / ((mu + n + 1) * (lambda + n + 1))) + t5 * (mu + lambda + 2);
}

inline Outcome vector_pair_form(int n, RandomSource& rs) {
  Outcome o;
  for (auto& [name, conn] : structures(n))
    for (auto [mu, lambda] : {std::pair{Rat(0), Rat(0)}, std::pair{Rat(-1), Rat(-1)}, std::pair{make_rat(1, 2), Rat(2)}}) {
      SymTensorField a = rs.field(n, 1, mu, 2), b = rs.field(n, 1, lambda, 2);
      o.expect(l_beta({a, b}, 0, conn).body == vector_pair(a, b, conn),
               name + " weights " + to_string(mu) + "," + to_string(lambda));
    }
  return o;
}

/// The weighted Schouten pairing for a vector b and a of valence one or two.
inline Poly pairing_form(const SymTensorField& a, const SymTensorField& b, const Connection& conn) {
  const int n = conn.dim();
  const Rat &l1 = a.weight, &l2 = b.weight;
  Poly out = transvect(a.body, b.body, l2, conn) - transvect(b.body, a.body, l1, conn);
  out += a.body * div(b, conn) * (l1 / (l2 + n + 1));
  if (a.k == 1) return out - b.body * div(a, conn) * (l2 / (l1 + n + 1));
  return out - b.body * div(a, conn) * (Rat(2) * l2 / (l1 + n + 3));
}

inline Outcome pairing_forms(int n, RandomSource& rs) {
  Outcome o;
  for (auto& [name, conn] : structures(n))
    for (int k : {1, 2})
      for (auto [l1, l2] : {std::pair{Rat(0), Rat(0)}, std::pair{make_rat(1, 2), Rat(-2)}}) {
        SymTensorField a = rs.field(n, k, l1, 2), b = rs.field(n, 1, l2, 2);
        o.expect(weighted_pairing(a, b, conn).body == pairing_form(a, b, conn),
                 name + " k=" + std::to_string(k) + " weights " + to_string(l1) + "," + to_string(l2));
      }
  return o;
}

// ------------------------------------------------------------------ star products

inline SymTensorField vec(int n, const Poly& body) { return SymTensorField(n, 1, 0, body); }

/// L_1(a, b) for weight-zero vector fields from the (1,1) table row.
inline Poly l1_vectors(const Poly& a, const Poly& b, const Connection& conn) {
  return l_k_minus_one(vec(conn.dim(), a), vec(conn.dim(), b), conn);
}

inline Outcome vector_star_formal(int n, RandomSource& rs) {
  Outcome o;
  const Poly mu = Poly::variable(var::kMu);
  for (auto& [name, conn] : structures(n)) {
    Poly a = rs.field(n, 1, 0, 2).body, b = rs.field(n, 1, 0, 2).body;
    auto B = star_product(a, b, mu, conn);
    Poly l0 = vector_pair(vec(n, a), vec(n, b), conn);
    o.expect(B.size() == 3 && B[0] == a * b, name + " B_0");
    o.expect(B[1] == poisson_bracket(a, b) / Rat(2) + l1_vectors(a, b, conn) * ((mu * Rat(2) + Poly(n + 1)) / Rat(n + 3)),
             name + " B_1");
    o.expect(B[2] == l0 * (mu * (mu + Poly(n + 1))) / Rat((n + 2) * (n + 1)), name + " B_2");
  }
  return o;
}

inline Outcome vector_star_symmetric(int n, RandomSource& rs) {
  Outcome o;
  const Poly half(make_rat(-(n + 1), 2));
  for (auto& [name, conn] : structures(n)) {
    Poly a = rs.field(n, 1, 0, 2).body, b = rs.field(n, 1, 0, 2).body;
    auto B = star_product(a, b, half, conn);
    Poly l0 = vector_pair(vec(n, a), vec(n, b), conn);
    o.expect(B[1] == poisson_bracket(a, b) / Rat(2), name + " B_1");
    o.expect(B[2] == l0 * (Rat(-(n + 1)) / Rat(4 * (n + 2))), name + " B_2");
  }
  return o;
}

inline Outcome tensor_function_star(int n, RandomSource& rs) {
  Outcome o;
  const Poly half(make_rat(-(n + 1), 2));
  for (auto& [name, conn] : structures(n)) {
    SymTensorField a = rs.field(n, 2, 0, 2);
    Poly f = rs.base_poly(n, 3);
    auto B = star_product(a.body, f, half, conn), Bs = star_product(f, a.body, half, conn);
    Poly l0 = second_order(a, f, Rat(0), conn);
    o.expect(B[0] == a.body * f && B[1] == poisson_bracket(a.body, f) / Rat(2), name + " B_0, B_1");
    o.expect(B[2] == l0 * (Rat(n + 3) / Rat(4 * (n + 2))), name + " B_2");
    bool reflected = B.size() == Bs.size();
    for (std::size_t r = 0; r < B.size() && reflected; ++r) reflected = Bs[r] == (r % 2 ? -B[r] : B[r]);
    o.expect(reflected, name + " reversed order");
  }
  return o;
}

inline Outcome vector_star_infinity(int n, RandomSource& rs) {
  Outcome o;
  for (auto& [name, conn] : structures(n)) {
    Poly a = rs.field(n, 1, 0, 2).body, b = rs.field(n, 1, 0, 2).body;
    auto S = star_infinity(a, b, conn);
    o.expect(S.size() == 3 && S[0] == a * b, name + " c^0");
    o.expect(S[1] == l1_vectors(a, b, conn) * (Rat(2) / Rat(n + 3)), name + " c^1");
    o.expect(S[2] == vector_pair(vec(n, a), vec(n, b), conn) / Rat((n + 2) * (n + 1)), name + " c^2");
  }
  return o;
}

// Difference of second-order star coefficients of two vector fields between
// the structure with trace-free Christoffel symbols pi and the flat one, at
// mu = -(n+1)/2. `quad_sign` is the sign of the (n+1)/2 pi.pi term: the
// printed display has +1, the curvature convention forces -1.
inline Poly distinctness_form(const std::vector<Poly>& pi, const Poly& a, const Poly& b, int n, int quad_sign) {
  auto G = [&](int i, int j, int k) -> const Poly& { return pi[(i * n + j) * n + k]; };
  Poly first, second;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly dv, quad;
      for (int p = 0; p < n; ++p) {
        dv += diff(G(i, j, p), var::x(p));
        for (int q = 0; q < n; ++q) quad += G(i, p, q) * G(j, q, p);
      }
      const Poly ai = diff(a, var::z(i)), bj = diff(b, var::z(j));
      first += (dv + quad * make_rat(quad_sign * (n + 1), 2)) * ai * bj;
      for (int k = 0; k < n; ++k)
        second += G(i, j, k) * (diff(a, var::z(j)) * diff(diff(b, var::z(i)), var::x(k)) +
                                diff(b, var::z(j)) * diff(diff(a, var::z(i)), var::x(k)));
    }
  return (first * (Rat(2) / Rat(1 - n)) + second) * (Rat(-(n + 1)) / Rat(4 * (n + 2)));
}

struct NamedForm {
  const char* name;
  Outcome (*run)(int, RandomSource&);
};

inline const std::vector<NamedForm>& all_forms() {
  static const std::vector<NamedForm> forms{
      {"lift-valence-1", lift_valence_one},
      {"lift-valence-2", lift_valence_two},
      {"lift-valence-3", lift_valence_three},
      {"excluded-weight-operators", excluded_operators},
      {"top-operator-general", l_k_minus_one_general},
      {"top-operator-table", l_k_minus_one_table},
      {"second-order-quantization", second_order_form},
      {"third-order-quantization", third_order_form},
      {"vector-pair-operator", vector_pair_form},
      {"weighted-schouten-pairing", pairing_forms},
      {"vector-star-formal-mu", vector_star_formal},
      {"vector-star-symmetric", vector_star_symmetric},
      {"tensor-function-star", tensor_function_star},
      {"vector-star-infinity", vector_star_infinity},
  };
  return forms;
}

}  // namespace golden
