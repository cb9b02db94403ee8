#pragma once

// Exact numbers of the form a + b*sqrt(3) with a, b rational.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cwlab {

class Scalar {
 public:
  Scalar() = default;
  template <std::integral I>
  Scalar(I value) : a_(static_cast<long>(value)) {}  // NOLINT(implicit)
  Scalar(mpq_class a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
  Scalar(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static Scalar sqrt3() { return Scalar(mpq_class(0), mpq_class(1)); }
  static Scalar rational(long num, long den) {
    return Scalar(mpq_class(num, den));
  }

  /// Parses "3/2", "-0.25", "r3", "1/2r3", "1/2+1/2r3", "2-3/4*r3".
  static Scalar parse(std::string_view text);

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& sqrt3_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  /// Exact sign of a + b*sqrt(3).
  int sign() const;

  Scalar operator-() const { return Scalar(-a_, -b_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  /// Multiplicative inverse; throws cwlab::Error on zero.
  Scalar inverse() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const;
  std::string to_string() const;
  std::size_t hash() const;

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class a_;
  mpq_class b_;
};

using Vec = std::vector<Scalar>;

struct ScalarHash {
  std::size_t operator()(const Scalar& s) const { return s.hash(); }
};

struct VecHash {
  std::size_t operator()(const Vec& v) const;
};

Scalar dot(const Vec& x, const Vec& y);
Vec operator+(const Vec& x, const Vec& y);
Vec operator-(const Vec& x, const Vec& y);
Vec operator-(const Vec& x);
Vec operator*(const Scalar& s, const Vec& x);
/// x += s * y
void axpy(Vec& x, const Scalar& s, const Vec& y);
bool is_zero(const Vec& v);

Vec parse_vec(std::string_view csv);
std::string to_string(const Vec& v);
std::vector<double> to_double(const Vec& v);

}  // namespace cwlab
