#include "projstar/onedim.hpp"

#include <algorithm>
#include <string>

#include "projstar/multilinear.hpp"
#include "projstar/starprod.hpp"

namespace projstar {

namespace {

const Rat kHalf = make_rat(1, 2);

Rat multinomial(const std::vector<int>& parts) {
  int total = 0;
  Rat out = 1;
  for (int p : parts) {
    total += p;
    out *= binomial(Rat(total), p);
  }
  return out;
}

/// Accumulates weighted pieces, merging equal weights.
void add_piece(Graded1D& acc, const WeightedFunction1D& f) {
  if (f.u.is_zero()) return;
  for (auto& g : acc)
    if (g.sigma == f.sigma) {
      g.u += f.u;
      return;
    }
  acc.push_back(f);
}

void prune(Graded1D& g) {
  std::erase_if(g, [](const WeightedFunction1D& f) { return f.u.is_zero(); });
  std::sort(g.begin(), g.end(), [](const auto& a, const auto& b) { return a.sigma < b.sigma; });
}

}  // namespace

Poly derivative_1d(const Poly& u, int m) {
  Poly r = u;
  for (int i = 0; i < m && !r.is_zero(); ++i) r = diff(r, var::x(0));
  return r;
}

bool is_excluded_1d(const Rat& sigma, int k) {
  return is_integer(sigma) && sgn(sigma) >= 0 && sigma < k;
}

std::vector<Poly> lift_1d(const WeightedFunction1D& u, int k) {
  if (k < 0) throw DomainError("valence must be non-negative");
  if (is_excluded_1d(u.sigma, k))
    throw ExcludedWeight("weight " + to_string(u.sigma) + " is excluded for valence " + std::to_string(k));
  std::vector<Poly> out(k + 1);
  for (int m = 0; m <= k; ++m) {
    Rat c = binomial(Rat(k), m) / falling_factorial(u.sigma, m);
    if (m % 2) c = -c;
    out[m] = derivative_1d(u.u, m) * c;
  }
  return out;
}

std::vector<Poly> lift_1d_normalized(const WeightedFunction1D& u, int k) {
  auto out = lift_1d(u, k);
  Rat c = binomial(u.sigma, k);
  if (k % 2) c = -c;
  for (auto& p : out) p *= c;
  return out;
}

WeightedFunction1D rc_bracket(const WeightedFunction1D& u1, const WeightedFunction1D& u2, int k) {
  if (k < 0) throw DomainError("bracket order must be non-negative");
  Poly out;
  for (int m = 0; m <= k; ++m) {
    Rat c = binomial(Rat(k - 1) - u2.sigma, m) * binomial(Rat(k - 1) - u1.sigma, k - m);
    if (is_zero(c)) continue;
    if (m % 2) c = -c;
    out += derivative_1d(u1.u, m) * derivative_1d(u2.u, k - m) * c;
  }
  return WeightedFunction1D{u1.sigma + u2.sigma - 2 * k, std::move(out)};
}

WeightedFunction1D rc_multilinear(const std::vector<WeightedFunction1D>& us, const std::vector<int>& ks) {
  if (us.empty() || us.size() != ks.size()) throw DomainError("one valence per argument is required");
  const int p = static_cast<int>(us.size());
  int K = 0;
  Rat Sigma = 0, pref = 1;
  for (int i = 0; i < p; ++i) {
    if (ks[i] < 0) throw DomainError("valence must be non-negative");
    if (is_excluded_1d(us[i].sigma, ks[i]))
      throw ExcludedWeight("weight " + to_string(us[i].sigma) + " is excluded for valence " + std::to_string(ks[i]));
    K += ks[i];
    Sigma += us[i].sigma;
    pref *= binomial(us[i].sigma, ks[i]);
  }
  if (K % 2) pref = -pref;
  // Derivative tables D^m u_i.
  std::vector<std::vector<Poly>> der(p);
  for (int i = 0; i < p; ++i)
    for (int m = 0; m <= ks[i]; ++m) der[i].push_back(derivative_1d(us[i].u, m));
  Poly out;
  std::vector<int> m(p, 0);
  while (true) {
    int M = 0;
    Rat c = 1;
    Poly prod(1);
    for (int i = 0; i < p; ++i) {
      M += m[i];
      c *= binomial(Rat(ks[i] - 1) - us[i].sigma, ks[i] - m[i]);
      prod *= der[i][m[i]];
    }
    c *= multinomial(m) * binomial(Sigma - K + 1, M);
    if (!is_zero(c) && !prod.is_zero()) out += derivative_1d(prod, K - M) * c;
    int i = 0;
    while (i < p && m[i] == ks[i]) m[i++] = 0;
    if (i == p) break;
    ++m[i];
  }
  return WeightedFunction1D{Sigma - 2 * K, out / pref};
}

WeightedFunction1D rc_multilinear_engine(const std::vector<WeightedFunction1D>& us, const std::vector<int>& ks,
                                         int beta) {
  if (us.empty() || us.size() != ks.size()) throw DomainError("one valence per argument is required");
  std::vector<SymTensorField> args;
  Rat Sigma = 0;
  int K = 0;
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (is_excluded_1d(us[i].sigma, ks[i]))
      throw ExcludedWeight("weight " + to_string(us[i].sigma) + " is excluded for valence " + std::to_string(ks[i]));
    args.emplace_back(1, ks[i], us[i].sigma - 2 * ks[i], mul_var(us[i].u, var::z(0), ks[i]));
    Sigma += us[i].sigma;
    K += ks[i];
  }
  SymTensorField L = l_beta(args, beta, Connection(1));
  return WeightedFunction1D{Sigma - 2 * (K - beta), coeff_of(L.body, var::z(0), beta)};
}

Poly l_beta_two_slot(const Poly& u, int k, const Rat& lambda, const Poly& v, const Rat& mu, int beta) {
  if (beta < 0 || beta > k) throw DomainError("beta must lie between 0 and the valence");
  const Rat s1 = lambda + 2 * k;
  if (is_excluded_1d(s1, k))
    throw ExcludedWeight("weight " + to_string(s1) + " is excluded for valence " + std::to_string(k));
  Poly out;
  for (int m = 0; m <= k - beta; ++m) {
    Rat c = binomial(Rat(k - beta - 1) - mu, m) * binomial(Rat(k - beta), m) / binomial(s1, m);
    if (!is_zero(c)) out += derivative_1d(u, m) * derivative_1d(v, k - beta - m) * c;
  }
  return out;
}

Rat cmz_t(int r, const Rat& mu, const Rat& k1, const Rat& k2) {
  if (r < 0) throw DomainError("order must be non-negative");
  Rat sum = 0;
  for (int j = 0; j <= r; ++j) {
    Rat den = binomial(k1 - kHalf, j) * binomial(k2 - kHalf, j) * binomial(Rat(r) - k1 - k2 - 3 * kHalf, j);
    if (is_zero(den)) throw DomainError("vanishing denominator in t_" + std::to_string(r));
    sum += binomial(Rat(r), j) * binomial(-kHalf, j) * binomial(-3 * kHalf - mu, j) * binomial(kHalf + mu, j) / den;
  }
  Rat q = make_rat(-1, 4), p = 1;
  for (int i = 0; i < r; ++i) p *= q;
  return p * sum;
}

Rat cmz_t_infinity(int r, const Rat& k1, const Rat& k2) {
  Rat den = falling_factorial(Rat(r) - k1 - kHalf, r) * falling_factorial(Rat(r) - k2 - kHalf, r) *
            falling_factorial(Rat(2 * r) - k1 - k2 - 3 * kHalf, r);
  if (is_zero(den)) throw DomainError("vanishing denominator in t_inf_" + std::to_string(2 * r));
  return falling_factorial(-kHalf, r) / den;
}

Graded1D cmz_mu_product(const WeightedFunction1D& u1, const WeightedFunction1D& u2, const Rat& mu, int order) {
  Graded1D out;
  const Rat k1 = u1.sigma / 2, k2 = u2.sigma / 2;
  for (int r = 0; r <= order; ++r) {
    WeightedFunction1D b = rc_bracket(u1, u2, r);
    b.u *= r == 0 ? Rat(1) : cmz_t(r, mu, k1, k2);
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<Graded1D> cmz_mu_product(const std::vector<Graded1D>& a, const std::vector<Graded1D>& b, const Rat& mu,
                                     int order) {
  std::vector<Graded1D> out(order + 1);
  for (int da = 0; da < static_cast<int>(a.size()) && da <= order; ++da)
    for (int db = 0; db < static_cast<int>(b.size()) && da + db <= order; ++db)
      for (const auto& pa : a[da])
        for (const auto& pb : b[db]) {
          auto terms = cmz_mu_product(pa, pb, mu, order - da - db);
          for (int r = 0; r < static_cast<int>(terms.size()); ++r) add_piece(out[da + db + r], terms[r]);
        }
  for (auto& g : out) prune(g);
  return out;
}

Graded1D cmz_infinity_product(const WeightedFunction1D& u1, const WeightedFunction1D& u2, int order) {
  Graded1D out;
  const Rat k1 = u1.sigma / 2, k2 = u2.sigma / 2;
  for (int r = 0; r <= order; ++r) {
    WeightedFunction1D b = rc_bracket(u1, u2, r);
    if (r % 2)
      b.u = Poly();
    else
      b.u *= cmz_t_infinity(r / 2, k1, k2);
    out.push_back(std::move(b));
  }
  return out;
}

Poly star_one_dim_coefficient(int k, int s, const Poly& mu) {
  if (s < 0 || s > k) return Poly();
  Rat c = binomial(Rat(k), s) / (binomial(Rat(2 * k), s) * binomial(Rat(2 * k + 1 - s), s));
  if (s % 2) c = -c;
  return binomial(Poly(k + 1) + mu, s) * c;
}

std::vector<Poly> star_one_dim(const WeightedFunction1D& u1, const WeightedFunction1D& u2, const Poly& mu) {
  if (!is_integer(u1.sigma) || sgn(u1.sigma) < 0 || u1.sigma.get_num().get_si() % 2)
    throw DomainError("the first argument must have weight 2k for an integer k >= 0");
  if (!is_zero(u2.sigma)) throw DomainError("the second argument must have weight 0");
  const int k = static_cast<int>(u1.sigma.get_num().get_si() / 2);
  std::vector<Poly> out(k + 1);
  for (int s = 0; s <= k; ++s) out[s] = star_one_dim_coefficient(k, s, mu) * rc_bracket(u1, u2, s).u;
  return out;
}

Rat symmetrized_second_coefficient(int k, const Rat& mu) {
  Poly a = star_one_dim_coefficient(k, 2, Poly(mu));
  Poly b = star_one_dim_coefficient(k, 2, Poly(Rat(-2) - mu));
  return (a.constant_term() + b.constant_term()) / 2;
}

GaussRat operator*(const GaussRat& a, const GaussRat& b) {
  return GaussRat{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussRat gauss_pow(const GaussRat& c, int e) {
  GaussRat out{1, 0};
  for (int i = 0; i < e; ++i) out = out * c;
  return out;
}

std::vector<Rat> star_infinity_one_dim_coefficients(int k) {
  const Connection flat(1);
  const WeightedFunction1D u1{2 * k, Poly(1)}, u2{0, Poly::variable(var::x(0), k)};
  auto B = star_infinity(mul_var(u1.u, var::z(0), k), u2.u, flat);
  std::vector<Rat> q(k + 1);
  for (int r = 0; r <= k; ++r) {
    Poly R = mul_var(rc_bracket(u1, u2, r).u, var::z(0), k - r);
    if (R.is_zero()) throw Error("reference bracket vanishes");
    Poly Br = r < static_cast<int>(B.size()) ? B[r] : Poly();
    q[r] = Br.is_zero() ? Rat(0) : Br.terms().front().second / R.terms().front().second;
    if (Br != R * q[r]) throw Error("limit product term is not a multiple of the bracket");
  }
  return q;
}

InfinityCorrespondence infinity_correspondence(int k, const GaussRat& c) {
  InfinityCorrespondence rep;
  auto q = star_infinity_one_dim_coefficients(k);
  rep.real_part_matches = true;
  rep.odd_imaginary = true;
  for (int r = 0; r <= k; ++r) {
    GaussRat v = gauss_pow(c, r);
    v.re *= q[r];
    v.im *= q[r];
    rep.star_real.push_back(v.re);
    rep.cmz.push_back(r % 2 ? Rat(0) : cmz_t_infinity(r / 2, Rat(k), Rat(0)));
    if (rep.star_real.back() != rep.cmz.back()) rep.real_part_matches = false;
    if (r % 2 && !is_zero(v.re)) rep.odd_imaginary = false;
  }
  return rep;
}

}  // namespace projstar
