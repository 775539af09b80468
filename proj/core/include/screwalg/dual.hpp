#pragma once

#include <cmath>
#include <iosfwd>
#include <numbers>
#include <string>
#include <string_view>

#include "screwalg/error.hpp"

namespace screwalg {

/// A dual number re + ε·du with ε² = 0.
///
/// Components are always finite; every constructor (and therefore every
/// arithmetic result) rejects NaN and infinities with ErrorKind::NonFinite.
class Dual {
 public:
  constexpr Dual() noexcept = default;
  Dual(double re) : Dual(re, 0.0) {}  // NOLINT(google-explicit-constructor)
  Dual(double re, double du) : re_(re), du_(du) {
    if (!std::isfinite(re) || !std::isfinite(du)) {
      raise(ErrorKind::NonFinite, "dual components must be finite");
    }
  }

  static Dual epsilon(double du = 1.0) { return {0.0, du}; }

  double re() const noexcept { return re_; }
  double du() const noexcept { return du_; }

  bool is_pure_dual() const noexcept { return re_ == 0.0; }

  Dual operator-() const { return {-re_, -du_}; }

  Dual& operator+=(const Dual& o) { return *this = Dual(re_ + o.re_, du_ + o.du_); }
  Dual& operator-=(const Dual& o) { return *this = Dual(re_ - o.re_, du_ - o.du_); }
  Dual& operator*=(const Dual& o) {
    return *this = Dual(re_ * o.re_, re_ * o.du_ + du_ * o.re_);
  }
  Dual& operator/=(const Dual& o);

  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator/(Dual a, const Dual& b) { return a /= b; }

  // Exact componentwise comparison; numerical code should use approx_equal.
  friend bool operator==(const Dual&, const Dual&) = default;

 private:
  double re_ = 0.0;
  double du_ = 0.0;
};

inline Dual mul(const Dual& x, const Dual& y) { return x * y; }

inline Dual conj(const Dual& x) { return {x.re(), -x.du()}; }

/// x⁻¹ = x*/(x* x). Throws NotInvertible when x is pure dual.
Dual inv(const Dual& x);

inline Dual& Dual::operator/=(const Dual& o) { return *this *= inv(o); }

/// f(a + εb) = f(a) + ε b f'(a) for a real-analytic f with derivative df.
template <class F, class DF>
Dual extend(F&& f, DF&& df, const Dual& x) {
  const double a = x.re();
  return {f(a), x.du() * df(a)};
}

Dual sqrt(const Dual& x);
Dual sin(const Dual& x);
Dual cos(const Dual& x);
Dual exp(const Dual& x);

/// sin(x)/x and (1 - cos x)/x², finite at x.re = 0. Used by the dual
/// Rodrigues formula.
Dual sinc(const Dual& x);
Dual cosc(const Dual& x);

/// The unique Θ ∈ {0} ∪ ((0,π) + εℝ) ∪ {π} with cos Θ = c.
///
/// |c.re| in (1, 1+tol] is clamped to ±1. At the endpoints the dual part must
/// vanish (|c.du| ≤ tol), since cos maps {0, π} only onto {1, -1}.
Dual acos_principal(const Dual& c, double tol = 1e-9);

/// Componentwise |a-b| ≤ tol·max(1, |value|).
bool approx_equal(const Dual& a, const Dual& b, double tol);

/// "a+bε" using the shortest representation that round-trips each double.
/// A zero dual part prints as just "a".
std::string to_string(const Dual& x);

/// Accepts "a", "bε", "a+bε", "a - bε"; 'ε' may also be spelled "eps".
/// Throws ParseError.
Dual parse_dual(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Dual& x);

inline constexpr double kPi = std::numbers::pi;

}  // namespace screwalg
