#include "trivol/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace trivol {

namespace {

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

// [+-]?[0-9]+
bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

bool all_digits(std::string_view s) {
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

// mpz_set_str rejects a leading '+' and treats leading zeros as octal unless
// the base is pinned.
mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) bad(text);
    mpz_class n = to_mpz(num);
    mpz_class d = to_mpz(den);
    if (d == 0) bad(text);
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ipart = s.substr(0, dot);
    std::string_view fpart = s.substr(dot + 1);
    bool negative = false;
    if (!ipart.empty() && (ipart.front() == '+' || ipart.front() == '-')) {
      negative = ipart.front() == '-';
      ipart.remove_prefix(1);
    }
    if (!all_digits(ipart) || !all_digits(fpart)) bad(text);
    if (ipart.empty() && fpart.empty()) bad(text);
    std::string digits = std::string(ipart) + std::string(fpart);
    if (digits.empty()) bad(text);
    mpz_class n(digits, 10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, fpart.size());
    mpq_class q(negative ? mpz_class(-n) : n, d);
    q.canonicalize();
    return q;
  }

  if (!is_integer_literal(s)) bad(text);
  return mpq_class(to_mpz(s));
}

std::string fraction_string(const Scalar& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

double to_double(const Scalar& x) { return mpq_get_d(x.get_mpq_t()); }

std::string double_string(const Scalar& x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", to_double(x));
  return buf;
}

}  // namespace trivol
