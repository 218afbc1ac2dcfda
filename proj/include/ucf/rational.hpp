#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace ucf {

/// Exact fraction num/den with den > 0 and gcd(num, den) = 1.
///
/// Arithmetic is carried out in 128-bit intermediates; a result that does not
/// fit back into 64 bits throws std::overflow_error rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integers
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational reciprocal() const;
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  // "p/q" with the denominator always present, e.g. "2/1".
  std::string str() const;
  // "p" for integers, "p/q" otherwise.
  std::string pretty() const;
  // Accepts "p", "p/q", "-p/q".
  static Rational parse(const std::string& text);

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ucf
