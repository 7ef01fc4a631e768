#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "ppt/algebra/rational.hpp"
#include "ppt/error.hpp"

namespace ppt::io {

class parse_error : public error {
 public:
  explicit parse_error(std::string_view text) : error("cannot parse number: '" + std::string(text) + "'") {}
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline Integer parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw parse_error(whole);
  Integer v(std::string(s), 10);
  return neg ? Integer(-v) : v;
}

}  // namespace detail

/// Exact value of "p", "p/q", or a decimal such as "-0.0125" or "1.5e-3".
inline Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw parse_error(text);

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Integer p = detail::parse_integer(s.substr(0, slash), text);
    std::string_view qs = s.substr(slash + 1);
    if (!detail::all_digits(qs)) throw parse_error(text);
    const Integer q(std::string(qs), 10);
    if (q == 0) throw division_by_zero();
    return Rational(p, q);
  }

  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    const Integer ev = detail::parse_integer(s.substr(e + 1), text);
    if (!ev.fits_slong_p() || abs(ev) > 100000) throw parse_error(text);
    exponent = ev.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !detail::all_digits(ip)) || (!fp.empty() && !detail::all_digits(fp)))
      throw parse_error(text);
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!detail::all_digits(s)) throw parse_error(text);
    digits = std::string(s);
  }
  Rational v(Integer(digits, 10));
  if (neg) v = -v;
  return v * pow(Rational(10), exponent);
}

}  // namespace ppt::io
