#include "screwalg/dual.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <ostream>

namespace screwalg {

Dual inv(const Dual& x) {
  if (x.re() == 0.0) {
    raise(ErrorKind::NotInvertible, "pure dual number " + to_string(x) + " has no inverse");
  }
  const double a = x.re();
  return {1.0 / a, -x.du() / (a * a)};
}

Dual sqrt(const Dual& x) {
  if (!(x.re() > 0.0)) {
    raise(ErrorKind::DomainError, "sqrt requires a positive real part, got " + to_string(x));
  }
  const double r = std::sqrt(x.re());
  return {r, x.du() / (2.0 * r)};
}

Dual sin(const Dual& x) {
  return extend([](double a) { return std::sin(a); }, [](double a) { return std::cos(a); }, x);
}

Dual cos(const Dual& x) {
  return extend([](double a) { return std::cos(a); }, [](double a) { return -std::sin(a); }, x);
}

Dual exp(const Dual& x) {
  const double e = std::exp(x.re());
  return {e, x.du() * e};
}

namespace {

// Below this magnitude the closed forms lose digits to cancellation and the
// truncated series is exact to double precision.
constexpr double kSeriesCutoff = 1e-3;

}  // namespace

Dual sinc(const Dual& x) {
  return extend(
      [](double a) {
        if (std::abs(a) < kSeriesCutoff) {
          const double a2 = a * a;
          return 1.0 - a2 / 6.0 + a2 * a2 / 120.0;
        }
        return std::sin(a) / a;
      },
      [](double a) {
        if (std::abs(a) < kSeriesCutoff) {
          const double a2 = a * a;
          return -a / 3.0 + a * a2 / 30.0;
        }
        return (a * std::cos(a) - std::sin(a)) / (a * a);
      },
      x);
}

Dual cosc(const Dual& x) {
  return extend(
      [](double a) {
        if (std::abs(a) < kSeriesCutoff) {
          const double a2 = a * a;
          return 0.5 - a2 / 24.0 + a2 * a2 / 720.0;
        }
        return (1.0 - std::cos(a)) / (a * a);
      },
      [](double a) {
        if (std::abs(a) < kSeriesCutoff) {
          const double a2 = a * a;
          return -a / 12.0 + a * a2 / 180.0;
        }
        return (a * std::sin(a) - 2.0 * (1.0 - std::cos(a))) / (a * a * a);
      },
      x);
}

Dual acos_principal(const Dual& c, double tol) {
  const double a = c.re();
  if (std::abs(a) > 1.0 + tol) {
    raise(ErrorKind::OutOfRange, "acos argument " + to_string(c) + " outside [-1, 1]");
  }
  if (std::abs(a) >= 1.0) {
    if (std::abs(c.du()) > tol) {
      raise(ErrorKind::BoundaryDualPart,
            "acos argument " + to_string(c) + " has a dual part at the endpoint");
    }
    return a > 0.0 ? Dual(0.0) : Dual(kPi);
  }
  const double theta = std::acos(a);
  return {theta, -c.du() / std::sin(theta)};
}

bool approx_equal(const Dual& a, const Dual& b, double tol) {
  const auto close = [tol](double u, double v) {
    return std::abs(u - v) <= tol * std::max({1.0, std::abs(u), std::abs(v)});
  };
  return close(a.re(), b.re()) && close(a.du(), b.du());
}

namespace {

std::string shortest(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    raise(ErrorKind::ParseError, "malformed dual number '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

std::string to_string(const Dual& x) {
  std::string out = shortest(x.re());
  if (x.du() == 0.0) return out;
  if (x.du() < 0.0) {
    out += " - " + shortest(-x.du());
  } else {
    out += " + " + shortest(x.du());
  }
  return out + "ε";
}

Dual parse_dual(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view dual_suffix;
  for (std::string_view marker : {std::string_view("ε"), std::string_view("eps")}) {
    if (s.size() >= marker.size() && s.substr(s.size() - marker.size()) == marker) {
      dual_suffix = marker;
      break;
    }
  }
  if (dual_suffix.empty()) return Dual(parse_real(s, text), 0.0);

  s.remove_suffix(dual_suffix.size());
  s = trim(s);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    std::string_view coeff = trim(s);
    // Bare "ε" / "-ε" mean a unit coefficient.
    if (coeff.empty() || coeff == "+") return Dual(0.0, 1.0);
    if (coeff == "-") return Dual(0.0, -1.0);
    return Dual(0.0, parse_real(coeff, text));
  }
  const double re = parse_real(s.substr(0, split), text);
  std::string_view coeff = trim(s.substr(split + 1));
  const double sign = s[split] == '-' ? -1.0 : 1.0;
  const double du = coeff.empty() ? 1.0 : parse_real(coeff, text);
  return Dual(re, sign * du);
}

std::ostream& operator<<(std::ostream& os, const Dual& x) { return os << to_string(x); }

}  // namespace screwalg
