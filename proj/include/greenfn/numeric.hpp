#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace green {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown on malformed input text (words, polynomials, data files).
struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int to_int(const Rat& r) {
  if (!is_integer(r)) throw ValidationError("expected integer, got " + r.get_str());
  return r.get_num();
}

/// Dense polynomial in one variable "q" with rational coefficients,
/// lowest degree first.  Zero polynomial has empty coefficient list.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& c) {
    if (c != 0) coeff_.push_back(c);
  }
  explicit Poly(std::vector<Rat> coeffs) : coeff_(std::move(coeffs)) { trim(); }

  static Poly monomial(const Rat& c, size_t deg) {
    if (c == 0) return Poly();
    std::vector<Rat> v(deg + 1, Rat(0));
    v[deg] = c;
    return Poly(std::move(v));
  }

  bool is_zero() const { return coeff_.empty(); }
  int degree() const { return coeff_.empty() ? -1 : int(coeff_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeff_; }
  Rat coeff(size_t i) const { return i < coeff_.size() ? coeff_[i] : Rat(0); }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = coeff_.size(); i-- > 0;) acc = acc * x + coeff_[i];
    return acc;
  }
  Int eval_int(const Int& x) const {
    Rat v = eval(Rat(x));
    return to_int(v);
  }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const { return coeff_ == o.coeff_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Exact division; throws ValidationError when the remainder is nonzero.
  Poly divide_exact(const Poly& d) const;

  /// Parses sums of monomials with optional parenthesised factors,
  /// e.g. "q^4+1", "2q^12(q^2-1)", "-3q".  Variable letter is 'q'.
  static Poly parse(const std::string& text);
  std::string str() const;

 private:
  void trim() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
  }
  std::vector<Rat> coeff_;
};

/// Unique interpolating polynomial of degree < points.size().
Poly interpolate(const std::vector<std::pair<Rat, Rat>>& points);

/// SHA-256 of a byte string, lowercase hex.
std::string sha256_hex(const std::string& data);

}  // namespace green
