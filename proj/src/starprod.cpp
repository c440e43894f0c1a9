#include "projstar/starprod.hpp"

#include <algorithm>

#include "projstar/geometry.hpp"

namespace projstar {

namespace {

int valence_of(const Poly& a) { return a.is_zero() ? 0 : a.degree_in(mask::kZ); }

SymTensorField piece(int n, int k, const Rat& weight, const Poly& body) { return SymTensorField(n, k, weight, body); }

void accumulate(std::vector<Poly>& acc, std::size_t r, const Poly& p) {
  if (acc.size() <= r) acc.resize(r + 1);
  acc[r] += p;
}

}  // namespace

std::vector<Poly> valence_pieces(const Poly& a) {
  const int k = valence_of(a);
  std::vector<Poly> out(k + 1);
  for (const auto& [m, c] : a.terms()) out[m.deg_in(mask::kZ)] += Poly::monomial(m, c);
  return out;
}

DensityDiffOp quantization_map(const Poly& symbol, const Rat& weight, const Poly& mu, const Connection& conn) {
  const int n = conn.dim();
  auto pieces = valence_pieces(symbol);
  auto jet = plane_wave_jet(mu, conn, static_cast<int>(pieces.size()) - 1);
  Poly sym;
  for (int k = 0; k < static_cast<int>(pieces.size()); ++k)
    if (!pieces[k].is_zero()) sym += quantize_symbol(piece(n, k, weight, pieces[k]), jet, conn);
  return DensityDiffOp{n, mu, weight, std::move(sym)};
}

Poly symbol_map(const DensityDiffOp& op, const Connection& conn) {
  const int n = conn.dim();
  Poly sigma = op.symbol;
  Poly out;
  std::vector<Poly> jet = plane_wave_jet(op.source, conn, std::max(op.order(), 0));
  while (!sigma.is_zero()) {
    const int k = sigma.degree_in(mask::kD);
    Poly a = principal_symbol(sigma);
    out += a;
    sigma -= quantize_symbol(piece(n, k, op.shift, a), jet, conn);
    if (!sigma.is_zero() && sigma.degree_in(mask::kD) >= k) throw Error("symbol map failed to lower the order");
  }
  return out;
}

std::vector<Poly> star_product(const Poly& a, const Poly& b, const Poly& mu, const Connection& conn) {
  const int n = conn.dim();
  auto pa = valence_pieces(a), pb = valence_pieces(b);
  const int top = static_cast<int>(pa.size() + pb.size()) - 2;
  std::vector<Poly> B(top + 1);
  auto jet = plane_wave_jet(mu, conn, top);
  for (int k = 0; k < static_cast<int>(pa.size()); ++k) {
    if (pa[k].is_zero()) continue;
    DensityDiffOp La{n, mu, 0, quantize_symbol(piece(n, k, 0, pa[k]), jet, conn)};
    for (int l = 0; l < static_cast<int>(pb.size()); ++l) {
      if (pb[l].is_zero()) continue;
      DensityDiffOp Lb{n, mu, 0, quantize_symbol(piece(n, l, 0, pb[l]), jet, conn)};
      Poly s = symbol_map(compose(La, Lb), conn);
      for (int r = 0; r <= k + l; ++r) B[r] += homogeneous_part(s, mask::kZ, k + l - r);
    }
  }
  return B;
}

std::vector<Poly> star_infinity(const Poly& a, const Poly& b, const Connection& conn) {
  const int n = conn.dim();
  auto pa = valence_pieces(a), pb = valence_pieces(b);
  std::vector<Poly> B(pa.size() + pb.size() - 1);
  for (int k = 0; k < static_cast<int>(pa.size()); ++k) {
    if (pa[k].is_zero()) continue;
    for (int l = 0; l < static_cast<int>(pb.size()); ++l) {
      if (pb[l].is_zero()) continue;
      const int K = k + l;
      std::vector<SymTensorField> args{piece(n, k, 0, pa[k]), piece(n, l, 0, pb[l])};
      for (int r = 0; r <= K; ++r) {
        Rat c = binomial(Rat(K), r) / falling_factorial(Rat(n + 2 * K - r), r);
        B[r] += l_beta(args, K - r, conn, LBetaMethod::Direct).body * c;
      }
    }
  }
  return B;
}

std::vector<Poly> star_infinity_from_limit(const Poly& a, const Poly& b, const Connection& conn) {
  auto B = star_product(a, b, Poly::variable(var::kMu), conn);
  for (std::size_t r = 0; r < B.size(); ++r) B[r] = coeff_of(B[r], var::kMu, static_cast<int>(r));
  return B;
}

std::vector<Poly> star_infinity_from_lifts(const Poly& a, const Poly& b, const Connection& conn) {
  const int n = conn.dim();
  auto pa = valence_pieces(a), pb = valence_pieces(b);
  std::vector<Poly> B(pa.size() + pb.size() - 1);
  for (int k = 0; k < static_cast<int>(pa.size()); ++k) {
    if (pa[k].is_zero()) continue;
    for (int l = 0; l < static_cast<int>(pb.size()); ++l) {
      if (pb[l].is_zero()) continue;
      auto pd = peel_decompose({piece(n, k, 0, pa[k]), piece(n, l, 0, pb[l])}, conn);
      for (int s = 0; s <= pd.K; ++s) B[s] += pd.u[s].body;
    }
  }
  return B;
}

Poly c1_cochain(const Poly& a, const Connection& conn) {
  const int n = conn.dim();
  auto pa = valence_pieces(a);
  Poly out;
  for (int k = 1; k < static_cast<int>(pa.size()); ++k)
    if (!pa[k].is_zero()) out += divergence_operator(pa[k], conn) / Rat(n + 2 * k - 1);
  return out;
}

Poly c1_coboundary(const Poly& a, const Poly& b, const Connection& conn) {
  return a * c1_cochain(b, conn) - c1_cochain(a * b, conn) + c1_cochain(a, conn) * b;
}

Poly c1_target(const Poly& a, const Poly& b, const Connection& conn) {
  const int n = conn.dim();
  auto pa = valence_pieces(a), pb = valence_pieces(b);
  Poly out;
  for (int k = 0; k < static_cast<int>(pa.size()); ++k) {
    if (pa[k].is_zero()) continue;
    for (int l = 0; l < static_cast<int>(pb.size()); ++l) {
      if (pb[l].is_zero() || k + l == 0) continue;
      const int K = k + l;
      std::vector<SymTensorField> args{piece(n, k, 0, pa[k]), piece(n, l, 0, pb[l])};
      out += l_beta(args, K - 1, conn).body * (Rat(K) / Rat(n + 2 * K - 1));
    }
  }
  return out;
}

std::vector<Poly> gauge_transform(const Connection& from, const Connection& to, const Poly& a, const Poly& mu) {
  if (from.dim() != to.dim()) throw DomainError("dimension mismatch");
  auto pa = valence_pieces(a);
  std::vector<Poly> D;
  for (int k = 0; k < static_cast<int>(pa.size()); ++k) {
    if (pa[k].is_zero()) continue;
    Poly s = symbol_map(quantization_map(pa[k], 0, mu, from), to);
    for (int r = 0; r <= k; ++r) accumulate(D, r, homogeneous_part(s, mask::kZ, k - r));
  }
  if (D.empty()) D.emplace_back();
  return D;
}

DerivationReport derivation_check(const Poly& x, const Poly& a, const Poly& mu, const Connection& conn) {
  DerivationReport rep;
  rep.automorphism = is_projective_automorphism(x, conn);
  auto B1 = star_product(x, a, mu, conn);
  auto B2 = star_product(a, x, mu, conn);
  rep.first_order = B1.size() > 1 && (B1[1] - B2[1]) == poisson_bracket(x, a);
  rep.higher_vanish = true;
  for (std::size_t r = 2; r < B1.size(); ++r)
    if (B1[r] != B2[r]) rep.higher_vanish = false;
  return rep;
}

}  // namespace projstar
