#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prelam {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact rational arithmetic on 64-bit numerator/denominator.
/// Values are kept in lowest terms with a positive denominator.
/// Comparisons never overflow (128-bit cross multiplication); arithmetic
/// that would leave the 64-bit range throws Error.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t num, std::int64_t den);

  static Rational of(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

  /// Parses "p/q" (or a bare integer "p").  Normalizes to lowest terms.
  static Rational parse(const std::string& text);

  /// Parses "p/q" and rejects values that are not already in lowest terms
  /// with q > 0.  Used for document input, where normalization would hide
  /// author mistakes.
  static Rational parse_strict(const std::string& text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  std::string str() const;

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
  }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  /// Representative in [0,1): this value minus its floor.
  Rational mod1() const;

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace prelam
