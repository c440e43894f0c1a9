#include "projstar/rational.hpp"

#include <cctype>

namespace projstar {

std::string to_string(const Rat& r) { return r.get_str(); }

Rat parse_rat(std::string_view s) {
  std::string t(s);
  if (t.empty()) throw ParseError("empty rational literal");
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  bool slash = false;
  bool digits = false;
  for (std::size_t j = i; j < t.size(); ++j) {
    if (t[j] == '/') {
      if (slash || !digits) throw ParseError("malformed rational literal: " + t);
      slash = true;
      digits = false;
    } else if (std::isdigit(static_cast<unsigned char>(t[j]))) {
      digits = true;
    } else {
      throw ParseError("malformed rational literal: " + t);
    }
  }
  if (!digits) throw ParseError("malformed rational literal: " + t);
  if (t[0] == '+') t.erase(0, 1);
  Rat r;
  if (r.set_str(t, 10) != 0) throw ParseError("malformed rational literal: " + t);
  if (r.get_den() == 0) throw ParseError("zero denominator: " + t);
  r.canonicalize();
  return r;
}

Rat factorial(int r) {
  Rat f = 1;
  for (int j = 2; j <= r; ++j) f *= j;
  return f;
}

Rat falling_factorial(const Rat& a, int r) {
  Rat f = 1;
  for (int j = 0; j < r; ++j) f *= a - j;
  return f;
}

Rat binomial(const Rat& a, int r) {
  if (r < 0) return 0;
  return falling_factorial(a, r) / factorial(r);
}

}  // namespace projstar
