#include "pmat/rational.hpp"

#include <cctype>

namespace pmat {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (auto caret = text.find('^'); caret != std::string::npos) {
    // Power-of-two form: "2^-20", "-2^3".
    std::string base = text.substr(0, caret);
    std::string exp = text.substr(caret + 1);
    bool negative = false;
    if (!base.empty() && (base[0] == '+' || base[0] == '-')) {
      negative = base[0] == '-';
      base = base.substr(1);
    }
    if (base != "2" || !is_integer_token(exp))
      throw InputError("bad rational literal: '" + text + "'");
    long k = 0;
    try {
      k = std::stol(exp);
    } catch (const std::exception&) {
      k = 5000;  // out of range below
    }
    if (k > 4096 || k < -4096)
      throw InputError("power-of-two exponent out of range in '" + text + "'");
    Rational value = 1;
    for (long i = 0; i < (k < 0 ? -k : k); ++i) value *= 2;
    if (k < 0) value = Rational(1) / value;
    return negative ? Rational(-value) : value;
  }
  if (auto slash = text.find('/'); slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
      throw InputError("bad rational literal: '" + text + "'");
    Integer d(den);
    if (d <= 0)
      throw InputError("nonpositive denominator in '" + text + "'");
    return Rational(Integer(num), d);
  }
  if (!is_integer_token(text))
    throw InputError("bad rational literal: '" + text + "'");
  return Rational(Integer(text));
}

std::string to_string(const Rational& value) { return value.str(); }

Rational l1_norm(const VectorXr& v) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += abs(v[i]);
  return s;
}

}  // namespace pmat
