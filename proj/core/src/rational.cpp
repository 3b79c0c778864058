#include "gksl3/rational.hpp"

#include <cctype>

namespace gksl3 {

std::string to_string(const Rational& r) {
  std::string s = num(r).str();
  const Integer d = den(r);
  if (d != 1) s += "/" + d.str();
  return s;
}

namespace {

bool valid_integer_token(const std::string& s) {
  std::size_t start = 0;
  if (start < s.size() && (s[start] == '+' || s[start] == '-')) ++start;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(const std::string& s) {
  if (!valid_integer_token(s)) throw ParseError("bad integer: '" + s + "'");
  // cpp_int rejects a leading '+'.
  return Integer(s.front() == '+' ? s.substr(1) : s);
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::string s = strip_spaces(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  const Integer p = parse_integer(s.substr(0, slash));
  const Integer q = parse_integer(s.substr(slash + 1));
  if (q == 0) throw ParseError("zero denominator: '" + text + "'");
  return make_rational(p, q);
}

Integer factorial(int n) {
  if (n < 0) throw IndexOutOfRange("factorial of negative argument");
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_string(z.re);
  std::string imag;
  if (z.im == 1) {
    imag = "i";
  } else if (z.im == -1) {
    imag = "-i";
  } else {
    imag = to_string(z.im) + "*i";
  }
  if (z.re == 0) return imag;
  if (z.im > 0) return to_string(z.re) + "+" + imag;
  return to_string(z.re) + imag;  // imag already carries the minus sign
}

GaussianRational parse_gaussian(const std::string& text) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty number");
  if (s.back() != 'i') return GaussianRational(parse_rational(s));
  s.pop_back();
  if (!s.empty() && s.back() == '*') s.pop_back();
  // Split off the real part: the last sign not at position 0 and not
  // following '/' starts the imaginary coefficient.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') {
      split = i;
      break;
    }
  }
  std::string re_part, im_part;
  if (split == std::string::npos) {
    im_part = s;
  } else {
    re_part = s.substr(0, split);
    im_part = s.substr(split);
  }
  Rational im;
  if (im_part.empty() || im_part == "+") {
    im = 1;
  } else if (im_part == "-") {
    im = -1;
  } else {
    im = parse_rational(im_part);
  }
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
  return GaussianRational(std::move(re), std::move(im));
}

}  // namespace gksl3
