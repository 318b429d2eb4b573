#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace moduli {

/// Arbitrary-precision integer. Every count, lattice entry, and rank in
/// this library is exact; nothing is ever rounded or truncated.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always kept in lowest terms.
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when an operation receives data outside its contract
/// (dimension mismatches, invalid singularity data, malformed input).
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

/// Canonical "p/q" rendering, q > 0, lowest terms.
inline std::string to_string(const Rat& r) {
  std::string s = numerator(r).str();
  s += '/';
  s += denominator(r).str();
  return s;
}

/// Parses "p", "p/q", with optional sign. Returns nullopt on garbage.
std::optional<Rat> parse_rational(const std::string& text);

/// Element of Q(i): re + im*i with exact rational parts.
struct GaussianRat {
  Rat re;
  Rat im;

  GaussianRat() = default;
  GaussianRat(Rat r) : re(std::move(r)) {}  // NOLINT: implicit by design
  GaussianRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_rational() const { return im == 0; }

  friend GaussianRat operator+(const GaussianRat& a, const GaussianRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRat operator-(const GaussianRat& a, const GaussianRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRat operator-(const GaussianRat& a) { return {-a.re, -a.im}; }
  friend GaussianRat operator*(const GaussianRat& a, const GaussianRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRat operator/(const GaussianRat& a, const GaussianRat& b) {
    Rat n = b.re * b.re + b.im * b.im;
    if (n == 0) throw input_error("division by zero in Q(i)");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  friend bool operator==(const GaussianRat& a, const GaussianRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRat& a, const GaussianRat& b) {
    return !(a == b);
  }
  friend bool operator<(const GaussianRat& a, const GaussianRat& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
};

/// Canonical "p/q+r/s i" (sign of the imaginary part replaces '+').
inline std::string to_string(const GaussianRat& z) {
  std::string s = to_string(z.re);
  if (z.im < 0) {
    s += '-';
    s += to_string(-z.im);
  } else {
    s += '+';
    s += to_string(z.im);
  }
  s += " i";
  return s;
}

std::optional<GaussianRat> parse_gaussian(const std::string& text);

// --- implementation ---

inline std::optional<Rat> parse_rational(const std::string& text) {
  auto parse_int = [](const std::string& t) -> std::optional<Int> {
    if (t.empty()) return std::nullopt;
    std::size_t k = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (k == t.size()) return std::nullopt;
    for (std::size_t i = k; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return std::nullopt;
    return Int(t);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Rat(*n);
  }
  auto n = parse_int(text.substr(0, slash));
  auto d = parse_int(text.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rat(*n, *d);
}

inline std::optional<GaussianRat> parse_gaussian(const std::string& text) {
  std::string t = text;
  while (!t.empty() && t.back() == ' ') t.pop_back();
  if (t.empty()) return std::nullopt;
  bool has_i = t.back() == 'i';
  if (!has_i) {
    auto r = parse_rational(t);
    if (!r) return std::nullopt;
    return GaussianRat(*r);
  }
  t.pop_back();
  while (!t.empty() && t.back() == ' ') t.pop_back();
  // split at the last top-level sign that separates re from im
  for (std::size_t pos = t.size(); pos-- > 1;) {
    if ((t[pos] == '+' || t[pos] == '-') && t[pos - 1] != '/' && t[pos - 1] != '+' &&
        t[pos - 1] != '-') {
      auto re = parse_rational(t.substr(0, pos));
      std::string imtxt = t.substr(pos);
      if (imtxt == "+") imtxt = "1";
      if (imtxt == "-") imtxt = "-1";
      auto im = parse_rational(imtxt);
      if (re && im) return GaussianRat(*re, *im);
    }
  }
  // pure imaginary: "r/s i"
  auto im = parse_rational(t.empty() ? "1" : t);
  if (!im) return std::nullopt;
  return GaussianRat(Rat(0), *im);
}

}  // namespace moduli
