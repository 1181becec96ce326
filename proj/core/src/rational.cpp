#include "demb/rational.hpp"

#include <cctype>

#include "demb/errors.hpp"

namespace demb {

namespace {

bool valid_int_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!valid_int_token(num) || !valid_int_token(den))
      throw ParseError("bad rational '" + s + "'");
    Int p(num), q(den);
    if (q == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(p, q);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string head = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool neg = !head.empty() && head[0] == '-';
    if (!head.empty() && (head[0] == '+' || head[0] == '-'))
      head = head.substr(1);
    if (head.empty()) head = "0";
    if (!valid_int_token(head) || frac.empty() || !valid_int_token(frac))
      throw ParseError("bad decimal '" + s + "'");
    Int scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Int p = Int(head) * scale + Int(frac);
    if (neg) p = -p;
    return Rational(p, scale);
  }
  if (!valid_int_token(s)) throw ParseError("bad rational '" + s + "'");
  return Rational(Int(s));
}

std::string to_string(const Rational& q) {
  Int num = numerator(q);
  Int den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  Int num = numerator(q);
  Int den = denominator(q);
  Int rn = boost::multiprecision::sqrt(num);
  Int rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

std::string sqrt_display(const Rational& t) {
  if (auto r = exact_sqrt(t)) return to_string(*r);
  return "sqrt(" + to_string(t) + ")";
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace demb
