#include "ssi/rational.hpp"

#include <cctype>
#include <cstdio>
#include <vector>

namespace ssi {

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational num = parse_rational(s.substr(0, slash));
    Rational den = parse_rational(s.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in rational literal '" + s + "'");
    return num / den;
  }

  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string digits;
  long scale = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw Error("malformed rational literal '" + s + "'");
  long exponent = 0;
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw Error("malformed rational literal '" + s + "'");
    std::string exp_text = s.substr(pos + 1);
    if (exp_text.empty()) throw Error("malformed exponent in '" + s + "'");
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      throw Error("malformed exponent in '" + s + "'");
    }
    if (used != exp_text.size()) throw Error("malformed exponent in '" + s + "'");
  }
  Integer mantissa(digits, 10);
  long net = exponent - scale;
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
  Rational r = net >= 0 ? Rational(mantissa * ten_pow) : Rational(mantissa, ten_pow);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int sign(const Rational& r) { return sgn(r); }

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Rational pow(const Rational& r, unsigned e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

namespace {

// Simplest rational in [lo, hi] for 0 <= lo <= hi, by continued fractions.
Rational simplest_nonneg(const Rational& lo, const Rational& hi) {
  Integer fl = floor(lo);
  if (Rational(fl) == lo) return lo;
  if (fl + 1 <= hi) return Rational(fl + 1);
  // Both share the integer part: recurse on reciprocals of the fractional parts.
  Rational lo_frac = lo - fl;
  Rational hi_frac = hi - fl;
  Rational inner = simplest_nonneg(1 / hi_frac, 1 / lo_frac);
  return Rational(fl) + 1 / inner;
}

// Simplest rational in (lo, hi) for 0 <= lo < hi; hi_inf marks hi = +infinity.
Rational simplest_open_nonneg(const Rational& lo, const Rational& hi, bool hi_inf) {
  Integer fl = floor(lo);
  Integer next = fl + 1;
  if (hi_inf || Rational(next) < hi) return Rational(next);
  // Both ends within [fl, fl + 1]: x = fl + 1/y with y in (1/(hi - fl), 1/(lo - fl)).
  bool lo_int = Rational(fl) == lo;
  Rational y = simplest_open_nonneg(1 / (hi - fl), lo_int ? Rational(0) : Rational(1 / (lo - fl)), lo_int);
  return Rational(fl) + 1 / y;
}

}  // namespace

Rational simplest_inside(const Rational& lo, const Rational& hi) {
  if (lo >= hi) throw Error("simplest_inside: empty interval");
  if (lo < 0 && hi > 0) return 0;
  if (hi <= 0) return -simplest_open_nonneg(-hi, -lo, false);
  return simplest_open_nonneg(lo, hi, false);
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_between(hi, lo);
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_nonneg(-hi, -lo);
  return simplest_nonneg(lo, hi);
}

Rational round_dyadic(const Rational& r, unsigned bits) {
  Integer scale = 1;
  scale <<= bits;
  Rational scaled = r * scale;
  Integer n = floor(scaled + Rational(1, 2));
  Rational out(n, scale);
  out.canonicalize();
  return out;
}

std::string to_decimal(const Rational& r, int digits) {
  mpf_class f(r, 256);
  std::vector<char> buffer(static_cast<std::size_t>(digits) + 64);
  gmp_snprintf(buffer.data(), buffer.size(), "%.*Fg", digits, f.get_mpf_t());
  std::string out(buffer.data());
  if (out == "-0") out = "0";
  return out;
}

}  // namespace ssi
