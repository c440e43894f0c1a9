#include "projstar/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <ostream>

namespace projstar {

std::string var_name(int v) {
  if (v >= var::kX && v < var::kX + kMaxDim) return "x" + std::to_string(v - var::kX + 1);
  if (v >= var::kZ && v < var::kZ + kMaxDim) return "z" + std::to_string(v - var::kZ + 1);
  if (v == var::kW) return "w";
  if (v >= var::kD && v < var::kD + kMaxDim) return "d" + std::to_string(v - var::kD + 1);
  if (v == var::kMu) return "mu";
  throw DomainError("unknown variable id " + std::to_string(v));
}

static void check_var(int v) {
  if (v < 0 || v >= var::kCount) throw DomainError("unknown variable id " + std::to_string(v));
}

void Mono::set(int v, int power) {
  check_var(v);
  int d = e[0] - e[v + 1] + power;
  if (power < 0 || power > 250 || d > 250) throw DomainError("exponent out of range");
  e[v + 1] = static_cast<std::uint8_t>(power);
  e[0] = static_cast<std::uint8_t>(d);
}

int Mono::deg_in(VarMask m) const {
  int d = 0;
  for (int v = 0; v < var::kCount; ++v)
    if (m & (1u << v)) d += e[v + 1];
  return d;
}

Mono Mono::restrict(VarMask m) const {
  Mono r;
  int d = 0;
  for (int v = 0; v < var::kCount; ++v) {
    if (m & (1u << v)) {
      r.e[v + 1] = e[v + 1];
      d += e[v + 1];
    }
  }
  r.e[0] = static_cast<std::uint8_t>(d);
  return r;
}

Mono operator*(const Mono& a, const Mono& b) {
  Mono r;
  for (std::size_t i = 0; i < r.e.size(); ++i) {
    unsigned s = unsigned(a.e[i]) + unsigned(b.e[i]);
    if (s > 250) throw DomainError("exponent overflow in monomial product");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

bool divides(const Mono& b, const Mono& a) {
  for (std::size_t i = 1; i < a.e.size(); ++i)
    if (b.e[i] > a.e[i]) return false;
  return true;
}

Mono operator/(const Mono& a, const Mono& b) {
  Mono r;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
  return r;
}

std::size_t MonoHash::operator()(const Mono& m) const noexcept {
  std::uint64_t lo;
  std::uint64_t hi;
  std::memcpy(&lo, m.e.data(), 8);
  std::memcpy(&hi, m.e.data() + 8, 8);
  std::uint64_t h = lo * 0x9E3779B97F4A7C15ull ^ (hi + 0x632BE59BD9B4E019ull + (lo << 6) + (lo >> 2));
  return static_cast<std::size_t>(h ^ (h >> 29));
}

// ---------------------------------------------------------------------------

Poly::Poly(const Rat& c) {
  if (!projstar::is_zero(c)) t_.emplace_back(Mono{}, c);
}

Poly::Poly(long c) {
  if (c != 0) t_.emplace_back(Mono{}, Rat(c));
}

Poly Poly::variable(int v, int power) {
  Mono m;
  m.set(v, power);
  return monomial(m, 1);
}

Poly Poly::monomial(const Mono& m, const Rat& c) {
  Poly p;
  if (!projstar::is_zero(c)) p.t_.emplace_back(m, c);
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  PolyBuilder b;
  for (auto& t : terms) b.add(t.first, t.second);
  return b.build();
}

Poly Poly::from_sorted(std::vector<Term> terms) {
  Poly p;
  p.t_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }

Rat Poly::constant_term() const {
  if (!t_.empty() && t_.back().first.is_one()) return t_.back().second;
  return 0;
}

Rat Poly::coeff(const Mono& m) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), m,
                             [](const Term& t, const Mono& k) { return t.first > k; });
  if (it != t_.end() && it->first == m) return it->second;
  return 0;
}

int Poly::total_degree() const { return t_.empty() ? -1 : t_.front().first.deg(); }

int Poly::degree(int v) const {
  check_var(v);
  int d = t_.empty() ? -1 : 0;
  for (const auto& t : t_) d = std::max(d, t.first[v]);
  return d;
}

int Poly::degree_in(VarMask m) const {
  int d = t_.empty() ? -1 : 0;
  for (const auto& t : t_) d = std::max(d, t.first.deg_in(m));
  return d;
}

VarMask Poly::support() const {
  VarMask s = 0;
  for (const auto& t : t_)
    for (int v = 0; v < var::kCount; ++v)
      if (t.first[v]) s |= 1u << v;
  return s;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.t_) t.second = -t.second;
  return r;
}

void Poly::add_scaled(const Poly& o, const Rat& c, const Mono& m) {
  if (o.t_.empty() || projstar::is_zero(c)) return;
  std::vector<Term> out;
  out.reserve(t_.size() + o.t_.size());
  auto a = t_.begin();
  auto b = o.t_.begin();
  const bool shift = !m.is_one();
  while (a != t_.end() || b != o.t_.end()) {
    if (b == o.t_.end()) {
      out.push_back(std::move(*a++));
      continue;
    }
    Mono mb = shift ? b->first * m : b->first;
    if (a == t_.end() || mb > a->first) {
      out.emplace_back(mb, b->second * c);
      ++b;
    } else if (a->first > mb) {
      out.push_back(std::move(*a++));
    } else {
      Rat s = a->second + b->second * c;
      if (!projstar::is_zero(s)) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  t_ = std::move(out);
}

Poly& Poly::operator+=(const Poly& o) {
  add_scaled(o, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  add_scaled(o, -1);
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (projstar::is_zero(c)) {
    t_.clear();
  } else {
    for (auto& t : t_) t.second *= c;
  }
  return *this;
}

Poly& Poly::operator/=(const Rat& c) {
  if (projstar::is_zero(c)) throw DomainError("division by zero");
  for (auto& t : t_) t.second /= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.t_.empty() || b.t_.empty()) return Poly();
  if (a.t_.size() < b.t_.size()) return b * a;
  if (b.t_.size() == 1) {
    Poly r;
    r.t_.reserve(a.t_.size());
    const auto& [mb, cb] = b.t_[0];
    for (const auto& [ma, ca] : a.t_) r.t_.emplace_back(ma * mb, ca * cb);
    return r;
  }
  PolyBuilder pb;
  for (const auto& [mb, cb] : b.t_)
    for (const auto& [ma, ca] : a.t_) pb.add(ma * mb, ca * cb);
  return pb.build();
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

std::string Poly::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : t_) {
    Rat a = abs(c);
    if (first) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int v = 0; v < var::kCount; ++v) {
      int p = m[v];
      if (!p) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(v);
      if (p > 1) mono += "^" + std::to_string(p);
    }
    if (mono.empty()) {
      s += projstar::to_string(a);
    } else if (a == 1) {
      s += mono;
    } else {
      s += projstar::to_string(a) + "*" + mono;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

void PolyBuilder::add(const Mono& m, const Rat& c) {
  if (!is_zero(c)) terms_.emplace_back(m, c);
}

void PolyBuilder::add(const Poly& p, const Rat& c, const Mono& shift) {
  if (is_zero(c)) return;
  const bool s = !shift.is_one();
  for (const auto& [m, a] : p.terms()) terms_.emplace_back(s ? m * shift : m, a * c);
}

Poly PolyBuilder::build() {
  Poly r;
  if (terms_.empty()) return r;
  std::vector<std::uint32_t> idx(terms_.size());
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(),
            [&](std::uint32_t i, std::uint32_t j) { return terms_[i].first > terms_[j].first; });
  r.t_.reserve(terms_.size());
  std::size_t i = 0;
  while (i < idx.size()) {
    const Mono& m = terms_[idx[i]].first;
    Rat s = std::move(terms_[idx[i]].second);
    std::size_t j = i + 1;
    while (j < idx.size() && terms_[idx[j]].first == m) s += terms_[idx[j++]].second;
    if (!is_zero(s)) r.t_.emplace_back(m, std::move(s));
    i = j;
  }
  terms_.clear();
  return r;
}

// ---------------------------------------------------------------------------

Poly pow(const Poly& p, int e) {
  if (e < 0) throw DomainError("negative power of a polynomial");
  Poly r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

Poly diff(const Poly& p, int v) {
  check_var(v);
  std::vector<Poly::Term> out;
  for (const auto& [m, c] : p.terms()) {
    int e = m[v];
    if (!e) continue;
    Mono n = m;
    n.set(v, e - 1);
    out.emplace_back(n, c * e);
  }
  return Poly::from_sorted(std::move(out));
}

Poly mul_var(const Poly& p, int v, int power) {
  if (power == 0) return p;
  Mono m;
  m.set(v, power);
  Poly r;
  r.add_scaled(p, 1, m);
  return r;
}

Poly substitute(const Poly& p, int v, const Poly& value) {
  check_var(v);
  int top = p.degree(v);
  if (top <= 0) return p;
  std::vector<Poly> powers{Poly(1)};
  for (int e = 1; e <= top; ++e) powers.push_back(powers.back() * value);
  PolyBuilder b;
  for (const auto& [m, c] : p.terms()) {
    int e = m[v];
    Mono rest = m;
    rest.set(v, 0);
    b.add(powers[e], c, rest);
  }
  return b.build();
}

Poly coeff_of(const Poly& p, int v, int power) {
  check_var(v);
  std::vector<Poly::Term> out;
  for (const auto& [m, c] : p.terms()) {
    if (m[v] != power) continue;
    Mono n = m;
    n.set(v, 0);
    out.emplace_back(n, c);
  }
  return Poly::from_sorted(std::move(out));
}

Poly homogeneous_part(const Poly& p, VarMask m, int degree) {
  std::vector<Poly::Term> out;
  for (const auto& t : p.terms())
    if (t.first.deg_in(m) == degree) out.push_back(t);
  return Poly::from_sorted(std::move(out));
}

std::vector<std::pair<Mono, Poly>> split(const Poly& p, VarMask m) {
  std::map<Mono, std::vector<Poly::Term>, std::greater<>> groups;
  for (const auto& [mono, c] : p.terms()) {
    Mono key = mono.restrict(m);
    groups[key].emplace_back(mono / key, c);
  }
  std::vector<std::pair<Mono, Poly>> out;
  out.reserve(groups.size());
  for (auto& [k, ts] : groups) out.emplace_back(k, Poly::from_sorted(std::move(ts)));
  return out;
}

Poly rename(const Poly& p, const std::vector<int>& from, const std::vector<int>& to) {
  if (from.size() != to.size()) throw DomainError("rename: size mismatch");
  std::vector<Poly::Term> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Mono n = m;
    for (int v : from) n.set(v, 0);
    for (std::size_t i = 0; i < from.size(); ++i) n.set(to[i], n[to[i]] + m[from[i]]);
    out.emplace_back(n, c);
  }
  return Poly::from_terms(std::move(out));
}

Poly map_terms(const Poly& p, const std::function<void(const Mono&, const Rat&, PolyBuilder&)>& f) {
  PolyBuilder b;
  for (const auto& [m, c] : p.terms()) f(m, c, b);
  return b.build();
}

Poly falling_factorial(const Poly& a, int r) {
  Poly f = 1;
  for (int j = 0; j < r; ++j) f *= a - Poly(j);
  return f;
}

Poly binomial(const Poly& a, int r) {
  if (r < 0) return Poly();
  return falling_factorial(a, r) / factorial(r);
}

// ---------------------------------------------------------------------------
// Recursive-descent parser.

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    skip();
    Poly acc;
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    Poly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        Poly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc /= d.constant_term();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      return pow(base, e);
    }
    return base;
  }

  Poly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Rat r;
      r.set_str(std::string(s_.substr(start, pos_ - start)), 10);
      return Poly(r);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      return Poly::variable(lookup(name));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  int lookup(const std::string& name) const {
    if (name == "w") return var::kW;
    if (name == "mu") return var::kMu;
    if (name.size() >= 2 && std::isdigit(static_cast<unsigned char>(name[1]))) {
      int idx = 0;
      for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) fail("unknown variable '" + name + "'");
        idx = idx * 10 + (name[i] - '0');
        if (idx > kMaxDim) break;
      }
      if (idx >= 1 && idx <= kMaxDim) {
        switch (name[0]) {
          case 'x': return var::x(idx - 1);
          case 'z': return var::z(idx - 1);
          case 'd': return var::d(idx - 1);
          default: break;
        }
      }
    }
    fail("unknown variable '" + name + "'");
  }
};

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace projstar
