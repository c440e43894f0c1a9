#include "projstar/tensor.hpp"

#include <algorithm>

namespace projstar {

namespace {

std::size_t ipow(int n, int r) {
  std::size_t s = 1;
  for (int i = 0; i < r; ++i) s *= static_cast<std::size_t>(n);
  return s;
}

Poly symbol_monomial(const std::vector<int>& idx) {
  Mono m;
  for (int i : idx) m.set(var::z(i), m[var::z(i)] + 1);
  return Poly::monomial(m, 1);
}

}  // namespace

SymTensorField::SymTensorField(int n_, int k_, Rat weight_, Poly body_)
    : n(n_), k(k_), weight(std::move(weight_)), body(std::move(body_)) {
  if (n < 1 || n > kMaxDim) throw DomainError("dimension out of range");
  if (k < 0) throw DomainError("negative valence");
  VarMask allowed = mask::kMu;
  for (int i = 0; i < n; ++i) allowed |= (1u << var::x(i)) | (1u << var::z(i));
  if (!body.uses_only(allowed)) throw DomainError("tensor body uses variables outside x1..xn, z1..zn, mu");
  for (const auto& [m, c] : body.terms())
    if (m.deg_in(mask::kZ) != k)
      throw DomainError("tensor body is not homogeneous of fiber degree " + std::to_string(k));
}

SymTensorField SymTensorField::scalar(int n, Rat weight, Poly value) {
  return SymTensorField(n, 0, std::move(weight), std::move(value));
}

SymTensorField SymTensorField::from_symbol(int n, Rat weight, const Poly& body) {
  int k = body.is_zero() ? 0 : body.terms().front().first.deg_in(mask::kZ);
  return SymTensorField(n, k, std::move(weight), body);
}

Poly SymTensorField::component(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != k) throw DomainError("component index has the wrong length");
  Poly p = body;
  for (int i : idx) p = diff(p, var::z(i));
  return p / factorial(k);
}

Tensor::Tensor(int n, std::string slots, Poly weight)
    : n_(n), slots_(std::move(slots)), weight_(std::move(weight)), c_(ipow(n, static_cast<int>(slots_.size()))) {}

std::vector<int> Tensor::unflatten(std::size_t i) const {
  std::vector<int> idx(slots_.size());
  for (int s = rank() - 1; s >= 0; --s) {
    idx[s] = static_cast<int>(i % n_);
    i /= n_;
  }
  return idx;
}

std::size_t Tensor::offset(const std::vector<int>& idx) const {
  std::size_t o = 0;
  for (int i : idx) o = o * n_ + static_cast<std::size_t>(i);
  return o;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (o.slots_ != slots_ || o.n_ != n_) throw DomainError("tensor shapes differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (o.slots_ != slots_ || o.n_ != n_) throw DomainError("tensor shapes differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Tensor& Tensor::operator*=(const Poly& c) {
  for (auto& p : c_) p *= c;
  return *this;
}

bool Tensor::operator==(const Tensor& o) const { return n_ == o.n_ && slots_ == o.slots_ && c_ == o.c_; }

bool Tensor::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Poly& p) { return p.is_zero(); });
}

Tensor scalar_tensor(int n, const Poly& value, const Poly& weight) {
  Tensor t(n, "", weight);
  t.flat(0) = value;
  return t;
}

Tensor to_tensor(const SymTensorField& a) {
  Tensor t(a.n, std::string(a.k, 'u'), Poly(a.weight));
  for (std::size_t i = 0; i < t.size(); ++i) t.flat(i) = a.component(t.unflatten(i));
  return t;
}

Tensor to_tensor(int n, const DensityField& f) { return scalar_tensor(n, f.value, f.weight); }

Tensor covariant_from_symbol(int n, int k, const Poly& body, const Poly& weight) {
  Tensor t(n, std::string(k, 'd'), weight);
  const Rat inv = Rat(1) / factorial(k);
  for (std::size_t i = 0; i < t.size(); ++i) {
    Poly p = body;
    for (int j : t.unflatten(i)) p = diff(p, var::z(j));
    t.flat(i) = p * inv;
  }
  return t;
}

Poly symbol_of(const Tensor& t) {
  const auto& s = t.slots();
  if (!s.empty() && s.find(s[0] == 'u' ? 'd' : 'u') != std::string::npos)
    throw DomainError("symbol_of needs slots of one kind");
  PolyBuilder b;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.flat(i).is_zero()) continue;
    b.add(t.flat(i) * symbol_monomial(t.unflatten(i)));
  }
  return b.build();
}

SymTensorField sym_field(const Tensor& t, const Rat& weight) {
  if (t.slots().find('d') != std::string::npos) throw DomainError("sym_field needs contravariant slots");
  return SymTensorField(t.dim(), t.rank(), weight, symbol_of(t));
}

Tensor outer(const Tensor& a, const Tensor& b) {
  if (a.dim() != b.dim()) throw DomainError("dimension mismatch");
  Tensor r(a.dim(), a.slots() + b.slots(), a.weight() + b.weight());
  const std::size_t nb = b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.flat(i).is_zero()) continue;
    for (std::size_t j = 0; j < nb; ++j) r.flat(i * nb + j) = a.flat(i) * b.flat(j);
  }
  return r;
}

Tensor contract(const Tensor& t, int s1, int s2) {
  if (s1 == s2 || s1 < 0 || s2 < 0 || s1 >= t.rank() || s2 >= t.rank()) throw DomainError("bad contraction slots");
  if (s1 > s2) std::swap(s1, s2);
  std::string slots = t.slots();
  slots.erase(s2, 1);
  slots.erase(s1, 1);
  Tensor r(t.dim(), slots, t.weight());
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto idx = t.unflatten(i);
    if (idx[s1] != idx[s2] || t.flat(i).is_zero()) continue;
    idx.erase(idx.begin() + s2);
    idx.erase(idx.begin() + s1);
    r.at(idx) += t.flat(i);
  }
  return r;
}

Tensor permute(const Tensor& t, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != t.rank()) throw DomainError("bad permutation");
  std::string slots(perm.size(), ' ');
  for (std::size_t j = 0; j < perm.size(); ++j) slots[j] = t.slots()[perm[j]];
  Tensor r(t.dim(), slots, t.weight());
  std::vector<int> nidx(perm.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto idx = t.unflatten(i);
    for (std::size_t j = 0; j < perm.size(); ++j) nidx[j] = idx[perm[j]];
    r.at(nidx) = t.flat(i);
  }
  return r;
}

Tensor contract_leading(const Tensor& a, const Tensor& b, int count) {
  Tensor t = outer(a, b);
  for (int j = count - 1; j >= 0; --j) t = contract(t, j, a.rank() + j - (count - 1 - j));
  return t;
}

Tensor nabla(const Tensor& t, const Connection& conn) {
  const int n = t.dim();
  Tensor r(n, "d" + t.slots(), t.weight());
  const bool weighted = !t.weight().is_zero() && conn.has_scale_form();
  const std::size_t sz = t.size();
  for (int p = 0; p < n; ++p) {
    for (std::size_t i = 0; i < sz; ++i) {
      const Poly& v = t.flat(i);
      if (v.is_zero()) continue;
      Poly& out = r.flat(p * sz + i);
      out += diff(v, var::x(p));
      if (weighted) out += t.weight() * conn.scale_form(p) * v;
    }
    if (conn.christoffels_vanish()) continue;
    for (std::size_t i = 0; i < sz; ++i) {
      const Poly& v = t.flat(i);
      if (v.is_zero()) continue;
      auto idx = t.unflatten(i);
      for (int s = 0; s < t.rank(); ++s) {
        const int q = idx[s];
        auto jdx = idx;
        for (int m = 0; m < n; ++m) {
          jdx[s] = m;
          // contravariant: (nabla_p T)^{..m..} += Gamma_pq^m T^{..q..}
          // covariant:     (nabla_p T)_{..m..} -= Gamma_pm^q T_{..q..}
          if (t.slots()[s] == 'u') {
            const Poly& g = conn.gamma(p, q, m);
            if (!g.is_zero()) r.flat(p * sz + t.offset(jdx)) += g * v;
          } else {
            const Poly& g = conn.gamma(p, m, q);
            if (!g.is_zero()) r.flat(p * sz + t.offset(jdx)) -= g * v;
          }
        }
      }
    }
  }
  return r;
}

Tensor nabla(const Tensor& t, const Connection& conn, int times) {
  Tensor r = t;
  for (int i = 0; i < times; ++i) r = nabla(r, conn);
  return r;
}

Tensor schouten_tensor(const Connection& conn) {
  const int n = conn.dim();
  Tensor t(n, "dd");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.at({i, j}) = conn.schouten(i, j);
  return t;
}

}  // namespace projstar
