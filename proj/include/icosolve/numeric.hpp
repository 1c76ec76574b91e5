#ifndef ICOSOLVE_NUMERIC_HPP
#define ICOSOLVE_NUMERIC_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <string_view>

#include "error.hpp"

namespace icosolve {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

/// Numerical thresholds shared by every stage of the pipeline.
struct Tolerances {
  double series_tol = 1e-14;      // relative size of the last kept series term
  double residual_tol = 1e-8;     // acceptance threshold on scaled residuals
  double degeneracy_tol = 1e-12;  // "this coefficient is zero"
  int max_series_terms = 5000;

  void validate() const {
    if (!(series_tol > 0) || !(residual_tol > 0) || !(degeneracy_tol > 0))
      throw Error(ErrorKind::InvalidArgument, "tolerances must be strictly positive");
    if (max_series_terms < 1)
      throw Error(ErrorKind::InvalidArgument, "max_series_terms must be at least 1");
  }
};

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline Complex require_finite(Complex z, std::string_view what) {
  if (!is_finite(z)) throw Error(ErrorKind::NonFinite, std::string(what) + " is not finite");
  return z;
}

/// Argument in (-pi, pi]. std::arg returns -pi for a negative real with
/// a negative-zero imaginary part; that case is folded onto +pi.
inline double principal_arg(Complex z) {
  if (z.imag() == 0.0 && z.real() < 0.0) return pi;
  return std::arg(z);
}

/// Principal n-th root: modulus |z|^(1/n), argument Arg(z)/n.
inline Complex principal_nth_root(Complex z, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "root order must be positive");
  require_finite(z, "radicand");
  if (z == Complex{}) return {};
  if (n == 1) return z;
  Complex w = std::polar(std::pow(std::abs(z), 1.0 / n), principal_arg(z) / n);
  // one Newton step removes the pow/polar rounding drift
  Complex wn1 = std::pow(w, n - 1);
  w -= (wn1 * w - z) / (double(n) * wn1);
  return w;
}

/// z^e on the principal branch, e real.
inline Complex principal_pow(Complex z, double e) {
  if (z == Complex{}) return e == 0.0 ? Complex{1.0} : Complex{};
  return std::polar(std::pow(std::abs(z), e), e * principal_arg(z));
}

inline Complex principal_sqrt(Complex z) { return principal_nth_root(z, 2); }

/// |got - want| / max(1, |want|).
inline double relative_error(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

namespace detail {

inline std::string format_real(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  Complex parse() {
    skip_space();
    if (at_end()) fail("empty complex literal");
    double sign1 = read_sign();
    if (peek() == 'i') {
      ++pos_;
      finish();
      return {0.0, sign1};
    }
    double first = sign1 * read_number();
    if (at_end_after_space()) return {first, 0.0};
    if (peek() == 'i') {
      ++pos_;
      finish();
      return {0.0, first};
    }
    if (peek() != '+' && peek() != '-') fail("expected '+', '-' or 'i'");
    double sign2 = read_sign();
    double second = 1.0;
    if (peek() != 'i') second = read_number();
    if (peek() != 'i') fail("imaginary part must end in 'i'");
    ++pos_;
    finish();
    return {first, sign2 * second};
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_ + 1, what); }

  void skip_space() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool at_end_after_space() {
    std::size_t save = pos_;
    skip_space();
    if (at_end()) return true;
    pos_ = save;
    return false;
  }

  void finish() {
    skip_space();
    if (!at_end()) fail("unexpected trailing characters");
  }

  double read_sign() {
    if (peek() == '+') {
      ++pos_;
      return 1.0;
    }
    if (peek() == '-') {
      ++pos_;
      return -1.0;
    }
    return 1.0;
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  // digits [. digits] [(e|E) [sign] digits], or . digits
  double read_number() {
    std::size_t start = pos_;
    std::size_t digits = 0;
    while (is_digit(peek())) ++pos_, ++digits;
    if (peek() == '.') {
      ++pos_;
      while (is_digit(peek())) ++pos_, ++digits;
    }
    if (digits == 0) {
      pos_ = start;
      fail("expected a number");
    }
    if (peek() == 'e' || peek() == 'E') {
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (!is_digit(peek())) fail("malformed exponent");
      while (is_digit(peek())) ++pos_;
    }
    double value = 0.0;
    auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (res.ec == std::errc::result_out_of_range) {
      pos_ = start;
      fail("number out of range");
    }
    if (res.ec != std::errc{} || res.ptr != text_.data() + pos_) {
      pos_ = start;
      fail("malformed number");
    }
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses literals such as "1-i", "-2.4", "3.1e-2i", "i", "2+0.5i".
inline Complex parse_complex(std::string_view text) { return detail::LiteralParser(text).parse(); }

/// Canonical human form "<re>+<im>i" using shortest round-trip digits, so
/// parse_complex(format_complex(z)) == z bit for bit.
inline std::string format_complex(Complex z) {
  require_finite(z, "formatted value");
  std::string out = detail::format_real(z.real());
  double im = z.imag();
  out += std::signbit(im) ? '-' : '+';
  out += detail::format_real(std::abs(im));
  out += 'i';
  return out;
}

}  // namespace icosolve

#endif  // ICOSOLVE_NUMERIC_HPP
