#include "projstar/io.hpp"

#include <fstream>
#include <sstream>

namespace projstar {

namespace {

int parse_index(const std::string& tok, int n) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad index '" + tok + "'");
  }
  if (pos != tok.size() || v < 1 || v > n) throw ParseError("index '" + tok + "' out of range 1.." + std::to_string(n));
  return v - 1;
}

Poly poly_field(const Json& v) {
  if (v.is_string()) return parse_poly(v.get<std::string>());
  if (v.is_number_integer()) return Poly(static_cast<long>(v.get<long long>()));
  throw ParseError("polynomial entries must be strings or integers");
}

}  // namespace

Connection connection_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n")) throw ParseError("connection needs an object with field \"n\"");
  if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
  const int n = j["n"].get<int>();
  if (n < 1 || n > kMaxDim) throw ParseError("\"n\" must lie in 1.." + std::to_string(kMaxDim));
  std::vector<Poly> gamma(n * n * n);
  std::vector<bool> set(n * n * n, false);
  if (j.contains("gamma")) {
    if (!j["gamma"].is_object()) throw ParseError("\"gamma\" must be an object");
    for (const auto& [key, val] : j["gamma"].items()) {
      std::vector<int> idx;
      std::stringstream ss(key);
      std::string tok;
      while (std::getline(ss, tok, ',')) idx.push_back(parse_index(tok, n));
      if (idx.size() != 3) throw ParseError("gamma key '" + key + "' must have three indices");
      Poly p = poly_field(val);
      for (auto [a, b] : {std::pair{idx[0], idx[1]}, std::pair{idx[1], idx[0]}}) {
        const int o = (a * n + b) * n + idx[2];
        if (set[o] && gamma[o] != p) throw ParseError("gamma entry '" + key + "' conflicts with its symmetric partner");
        gamma[o] = p;
        set[o] = true;
      }
    }
  }
  std::vector<Poly> tau;
  if (j.contains("scale_form")) {
    if (!j["scale_form"].is_array() || static_cast<int>(j["scale_form"].size()) != n)
      throw ParseError("\"scale_form\" must be an array of n polynomials");
    for (const auto& v : j["scale_form"]) tau.push_back(poly_field(v));
  }
  return Connection(n, std::move(gamma), std::move(tau));
}

Connection load_connection(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open connection file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("connection file: ") + e.what());
  }
  return connection_from_json(j);
}

Json connection_to_json(const Connection& conn) {
  const int n = conn.dim();
  Json j;
  j["n"] = n;
  Json g = Json::object();
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (!conn.gamma(a, b, c).is_zero())
          g[std::to_string(a + 1) + "," + std::to_string(b + 1) + "," + std::to_string(c + 1)] =
              conn.gamma(a, b, c).to_string();
  j["gamma"] = g;
  if (conn.has_scale_form()) {
    Json t = Json::array();
    for (const auto& p : conn.scale_forms()) t.push_back(p.to_string());
    j["scale_form"] = t;
  }
  return j;
}

std::string monomial_string(const Mono& m) { return Poly::monomial(m, 1).to_string(); }

Json poly_to_json(const Poly& p) {
  Json j = Json::object();
  for (const auto& [m, c] : p.terms()) j[monomial_string(m)] = to_string(c);
  return j;
}

Json series_to_json(const std::vector<Poly>& terms) {
  Json j = Json::object();
  for (std::size_t r = 0; r < terms.size(); ++r) j[std::to_string(r)] = poly_to_json(terms[r]);
  return j;
}

std::string series_to_text(const std::vector<Poly>& terms, const std::string& label) {
  std::string out;
  for (std::size_t r = 0; r < terms.size(); ++r) {
    if (terms[r].is_zero()) continue;
    out += "[" + label + "^" + std::to_string(r) + "] " + terms[r].to_string() + "\n";
  }
  if (out.empty()) out = "0\n";
  return out;
}

}  // namespace projstar
