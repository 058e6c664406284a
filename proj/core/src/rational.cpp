#include "cookiecut/rational.hpp"

#include <cctype>

namespace cookiecut {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rat> parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty()) return std::nullopt;

  auto slash = s.find('/');
  auto dot = s.find('.');
  Rat value;
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class d(den);
    if (d == 0) return std::nullopt;
    value = Rat(mpz_class(num), d);
    value.canonicalize();
  } else if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || (!frac.empty() && !all_digits(frac))) return std::nullopt;
    mpz_class scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class numerator = mpz_class(whole) * scale + (frac.empty() ? mpz_class(0) : mpz_class(frac));
    value = Rat(numerator, scale);
    value.canonicalize();
  } else {
    if (!all_digits(s)) return std::nullopt;
    value = Rat(mpz_class(s));
  }
  if (negative) value = -value;
  return value;
}

bool is_decimal_literal(const std::string& text) {
  return text.find('.') != std::string::npos;
}

std::string fraction_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace cookiecut
