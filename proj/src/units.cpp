#include "qres/units.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <system_error>

namespace qres {

namespace {

// Rounds n/d to the nearest integer, halves away from zero. d > 0.
mpz_class round_half_away(const mpz_class& n, const mpz_class& d) {
  mpz_class twice = 2 * abs(n) + d;
  mpz_class denom = 2 * d;
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), twice.get_mpz_t(), denom.get_mpz_t());
  return n < 0 ? mpz_class(-r) : r;
}

mpz_class pow10(int k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return p;
}

std::string trim_micros(std::int64_t micros) {
  const bool negative = micros < 0;
  // abs of INT64_MIN is not representable; go through mpz.
  mpz_class m(std::to_string(micros), 10);
  if (negative) m = -m;
  mpz_class whole = m / kMicrosPerUnit;
  mpz_class frac = m % kMicrosPerUnit;
  std::string out = negative ? "-" : "";
  out += whole.get_str();
  if (frac != 0) {
    std::string f = frac.get_str();
    f.insert(0, 6 - f.size(), '0');
    while (f.back() == '0') f.pop_back();
    out += "." + f;
  }
  return out;
}

}  // namespace

std::int64_t to_micros(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite amount");
  Exact scaled = exact_from_double(value) * kMicrosPerUnit;
  mpz_class r = round_half_away(scaled.get_num(), scaled.get_den());
  if (!r.fits_slong_p()) throw std::out_of_range("amount overflows micro units");
  return r.get_si();
}

Exact micros_to_exact(std::int64_t micros) {
  Exact q(mpz_class(std::to_string(micros), 10), mpz_class(kMicrosPerUnit));
  q.canonicalize();
  return q;
}

Exact time_cost(Duration time, Money rate_per_second) {
  Exact q(mpz_class(std::to_string(time.micros), 10) * mpz_class(std::to_string(rate_per_second.micros), 10),
          mpz_class(kMicrosPerUnit) * kMicrosPerUnit);
  q.canonicalize();
  return q;
}

std::string format_fixed(const Exact& value, int digits) {
  mpz_class scaled = round_half_away(value.get_num() * pow10(digits), value.get_den());
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out;
  if (negative) out += '-';
  out += s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  return out;
}

std::string format_decimal(Money m) { return trim_micros(m.micros); }
std::string format_decimal(Duration d) { return trim_micros(d.micros); }

bool is_terminating_decimal(const Exact& q) {
  mpz_class d = q.get_den();
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) d /= 2;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) d /= 5;
  return d == 1;
}

std::string format_exact_decimal(const Exact& q, int max_fraction_digits) {
  int digits = max_fraction_digits;
  if (is_terminating_decimal(q)) {
    // Smallest k with den | 10^k.
    mpz_class d = q.get_den();
    int k = 0;
    while (d != 1) {
      mpz_class g = gcd(d, mpz_class(10));
      d /= g;
      ++k;
    }
    digits = std::max(k, 0);
  }
  std::string s = format_fixed(q, digits);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

Exact parse_decimal(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  int fraction_digits = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      digits += c;
      seen_digit = true;
      if (seen_point) ++fraction_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  long exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    const char* first = text.data() + i;
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc() || ptr != last) {
      throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
    }
    i = text.size();
  }
  if (i != text.size()) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  if (exponent > 4000 || exponent < -4000) throw std::invalid_argument("exponent out of range");

  mpz_class n(digits, 10);
  const long shift = exponent - fraction_digits;
  Exact q;
  if (shift >= 0) {
    q = Exact(n * pow10(static_cast<int>(shift)));
  } else {
    q = Exact(n, pow10(static_cast<int>(-shift)));
    q.canonicalize();
  }
  return negative ? Exact(-q) : q;
}

Exact exact_from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite number");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw std::invalid_argument("number formatting failed");
  return parse_decimal(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

Exact simplest_in_interval(const Exact& lo, const Exact& hi) {
  if (lo > hi) throw std::invalid_argument("empty interval");
  if (lo <= 0 && hi >= 0) return Exact(0);
  if (hi < 0) return Exact(-simplest_in_interval(Exact(-hi), Exact(-lo)));

  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (lo == Exact(fl)) return Exact(fl);
  if (Exact(fl + 1) <= hi) return Exact(fl + 1);
  // fl < lo <= hi < fl + 1: recurse on the reciprocals of the fractional parts.
  Exact inner = simplest_in_interval(Exact(1 / (hi - fl)), Exact(1 / (lo - fl)));
  Exact result = Exact(fl) + 1 / inner;
  result.canonicalize();
  return result;
}

}  // namespace qres
