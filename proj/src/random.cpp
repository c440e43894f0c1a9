#include "projstar/random.hpp"

namespace projstar {

long RandomSource::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }

long RandomSource::nonzero(long bound) {
  long v = uniform(1, bound);
  return uniform(0, 1) ? v : -v;
}

Poly RandomSource::base_poly(int n, int max_deg, int terms) {
  PolyBuilder b;
  for (int t = 0; t < terms; ++t) {
    Mono m;
    int deg = static_cast<int>(uniform(0, max_deg));
    for (int d = 0; d < deg; ++d) {
      int v = var::x(static_cast<int>(uniform(0, n - 1)));
      m.set(v, m[v] + 1);
    }
    b.add(m, Rat(nonzero(3)));
  }
  return b.build();
}

Poly RandomSource::symbol(int n, int k, int max_deg, int terms) {
  PolyBuilder b;
  for (int t = 0; t < terms; ++t) {
    Mono m;
    for (int d = 0; d < k; ++d) {
      int v = var::z(static_cast<int>(uniform(0, n - 1)));
      m.set(v, m[v] + 1);
    }
    b.add(base_poly(n, max_deg, 2), 1, m);
  }
  return b.build();
}

SymTensorField RandomSource::field(int n, int k, const Rat& weight, int max_deg, int terms) {
  return SymTensorField(n, k, weight, symbol(n, k, max_deg, terms));
}

Rat RandomSource::weight(int, int) {
  static const long num[] = {0, 1, -1, 1, 2, -1, 3};
  static const long den[] = {1, 1, 1, 2, 1, 3, 2};
  long i = uniform(0, 6);
  return make_rat(num[i], den[i]);
}

std::vector<Poly> remove_trace(int n, std::vector<Poly> gamma) {
  std::vector<Poly> t(n);
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < n; ++p) t[i] += gamma[(i * n + p) * n + p];
  const Rat c = Rat(1) / Rat(n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      gamma[(i * n + j) * n + i] -= t[j] * c;
      gamma[(i * n + j) * n + j] -= t[i] * c;
    }
  return gamma;
}

Connection RandomSource::trace_free_connection(int n, int max_deg, int terms) {
  if (n == 1) return Connection(1);
  std::vector<Poly> g(std::size_t(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (uniform(0, 2) == 0) continue;
        Poly p = base_poly(n, max_deg, terms);
        g[(i * n + j) * n + k] = p;
        g[(j * n + i) * n + k] = p;
      }
  return Connection(n, remove_trace(n, std::move(g)));
}

std::vector<Poly> RandomSource::exact_covector(int n, int max_deg) {
  Poly f = base_poly(n, max_deg + 1, 3);
  std::vector<Poly> g(n);
  for (int i = 0; i < n; ++i) g[i] = diff(f, var::x(i));
  return g;
}

}  // namespace projstar
