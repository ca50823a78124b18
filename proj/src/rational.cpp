#include "prelam/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace prelam {

namespace {

std::int64_t checked_cast(__int128 v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(std::string("rational overflow in ") + what);
  }
  return static_cast<std::int64_t>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational from128(__int128 num, __int128 den, const char* what) {
  if (den == 0) throw Error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(checked_cast(num, what), checked_cast(den, what));
}

bool parse_int64(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw Error("zero denominator");
  if (den_ < 0) {
    if (num_ == std::numeric_limits<std::int64_t>::min() || den_ == std::numeric_limits<std::int64_t>::min()) {
      throw Error("rational overflow in negate");
    }
    num_ = -num_;
    den_ = -den_;
  }
  std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  std::int64_t p = 0, q = 1;
  if (slash == std::string::npos) {
    if (!parse_int64(text, p)) throw Error("malformed rational: '" + text + "'");
  } else {
    if (!parse_int64(std::string_view(text).substr(0, slash), p) ||
        !parse_int64(std::string_view(text).substr(slash + 1), q)) {
      throw Error("malformed rational: '" + text + "'");
    }
  }
  return Rational(p, q);
}

Rational Rational::parse_strict(const std::string& text) {
  auto slash = text.find('/');
  std::int64_t p = 0, q = 1;
  if (slash == std::string::npos) {
    if (!parse_int64(text, p)) throw Error("malformed rational: '" + text + "'");
  } else {
    if (!parse_int64(std::string_view(text).substr(0, slash), p) ||
        !parse_int64(std::string_view(text).substr(slash + 1), q)) {
      throw Error("malformed rational: '" + text + "'");
    }
  }
  if (q <= 0) throw Error("rational denominator must be positive: '" + text + "'");
  if (std::gcd(p < 0 ? -p : p, q) != 1 && p != 0) {
    throw Error("non-lowest-terms rational: '" + text + "'");
  }
  if (p == 0 && q != 1) throw Error("non-lowest-terms rational: '" + text + "'");
  return Rational(p, q);
}

std::string Rational::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator+(const Rational& o) const {
  __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  return from128(n, d, "add");
}

Rational Rational::operator-(const Rational& o) const {
  __int128 n = static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  return from128(n, d, "sub");
}

Rational Rational::operator*(const Rational& o) const {
  __int128 n = static_cast<__int128>(num_) * o.num_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  return from128(n, d, "mul");
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw Error("division by zero rational");
  __int128 n = static_cast<__int128>(num_) * o.den_;
  __int128 d = static_cast<__int128>(den_) * o.num_;
  return from128(n, d, "div");
}

Rational Rational::operator-() const {
  if (num_ == std::numeric_limits<std::int64_t>::min()) throw Error("rational overflow in negate");
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::mod1() const {
  std::int64_t r = num_ % den_;
  if (r < 0) r += den_;
  Rational out;
  out.num_ = r;
  out.den_ = den_;
  return out;
}

}  // namespace prelam
