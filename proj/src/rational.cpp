#include "nashgraph/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace nashgraph {

namespace {

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Rational parse_integer(std::string_view s) {
  std::string_view digits = s;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty() || !all_digits(digits)) {
    throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  }
  mpz_class z(std::string(digits), 10);
  if (negative) z = -z;
  return Rational(z);
}

}  // namespace

Rational parse_rational(std::string_view token) {
  if (token.empty()) throw std::invalid_argument("empty number");

  if (auto slash = token.find('/'); slash != std::string_view::npos) {
    Rational num = parse_integer(token.substr(0, slash));
    std::string_view den_text = token.substr(slash + 1);
    if (den_text.empty() || !all_digits(den_text)) {
      throw std::invalid_argument("bad denominator: '" + std::string(token) + "'");
    }
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(token) + "'");
    Rational r(num.get_num(), den);
    r.canonicalize();
    return r;
  }

  if (auto dot = token.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = token.substr(0, dot);
    std::string_view frac_part = token.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) || !all_digits(int_part) || !all_digits(frac_part)) {
      throw std::invalid_argument("not a number: '" + std::string(token) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class num(digits.empty() ? std::string("0") : digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    Rational r(num, den);
    r.canonicalize();
    if (negative) r = -r;
    return r;
  }

  return parse_integer(token);
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

RationalVector parse_rational_list(std::string_view text) {
  RationalVector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    out.push_back(parse_rational(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(const RationalVector& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += to_string(values[i]);
  }
  return out;
}

}  // namespace nashgraph
