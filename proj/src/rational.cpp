#include "trop/rational.hpp"

#include <cctype>

namespace trop {

namespace {

bool is_integer_token(const std::string& t) {
  if (t.empty()) return false;
  std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

Rat parse_rational(const std::string& s) {
  const std::string t = strip(s);
  const std::size_t slash = t.find('/');
  std::string num_s, den_s;
  if (slash == std::string::npos) {
    num_s = t;
    den_s = "1";
  } else {
    num_s = strip(t.substr(0, slash));
    den_s = strip(t.substr(slash + 1));
  }
  if (!is_integer_token(num_s) || !is_integer_token(den_s))
    throw ParseError("malformed rational: \"" + s + "\"");
  Int num(num_s), den(den_s);
  if (den == 0) throw ParseError("zero denominator in rational: \"" + s + "\"");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string rat_to_decimal(const Rat& x, int digits) {
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const bool negative = x < 0;
  Int num = abs(x.get_num()) * scale;
  const Int& den = x.get_den();
  // round half away from zero: floor((2*num + den) / (2*den))
  Int scaled = (2 * num + den) / (2 * den);
  Int whole = scaled / scale;
  Int frac = scaled % scale;
  std::string out = whole.get_str();
  if (frac != 0) {
    std::string f = frac.get_str();
    f.insert(f.begin(), static_cast<std::size_t>(digits) - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    out += "." + f;
  }
  if (negative && (whole != 0 || frac != 0)) out.insert(out.begin(), '-');
  return out;
}

}  // namespace trop
