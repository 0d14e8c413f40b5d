#include "greenfn/numeric.hpp"

#include <array>
#include <cctype>
#include <cstring>

namespace green {

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> v(std::max(coeff_.size(), o.coeff_.size()), Rat(0));
  for (size_t i = 0; i < coeff_.size(); ++i) v[i] += coeff_[i];
  for (size_t i = 0; i < o.coeff_.size(); ++i) v[i] += o.coeff_[i];
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Rat> v = coeff_;
  for (auto& c : v) c = -c;
  return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> v(coeff_.size() + o.coeff_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeff_.size(); ++i)
    for (size_t j = 0; j < o.coeff_.size(); ++j) v[i + j] += coeff_[i] * o.coeff_[j];
  return Poly(std::move(v));
}

Poly Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw ValidationError("polynomial division by zero");
  std::vector<Rat> rem = coeff_;
  std::vector<Rat> quot;
  int dd = d.degree();
  while (int(rem.size()) - 1 >= dd) {
    int k = int(rem.size()) - 1 - dd;
    Rat c = rem.back() / d.coeff_.back();
    if (int(quot.size()) < k + 1) quot.resize(k + 1, Rat(0));
    quot[k] = c;
    for (int i = 0; i <= dd; ++i) rem[k + i] -= c * d.coeff_[i];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  if (!rem.empty()) throw ValidationError("polynomial division not exact");
  return Poly(std::move(quot));
}

namespace {

struct PolyParser {
  const std::string& s;
  size_t i = 0;
  explicit PolyParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool peek(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++i;
      return true;
    }
    return false;
  }

  Int parse_uint() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected integer", i);
    return Int(s.substr(start, i - start));
  }

  // expr := term (('+'|'-') term)*
  Poly parse_expr() {
    Poly acc = parse_term();
    for (;;) {
      if (eat('+'))
        acc = acc + parse_term();
      else if (eat('-'))
        acc = acc - parse_term();
      else
        return acc;
    }
  }

  // term := ['-'] factor+   (implicit multiplication)
  Poly parse_term() {
    bool neg = false;
    while (eat('-')) neg = !neg;
    Poly acc = parse_factor();
    for (;;) {
      skip_ws();
      if (i >= s.size()) break;
      char c = s[i];
      if (c == 'q' || c == '(' || std::isdigit(static_cast<unsigned char>(c)))
        acc = acc * parse_factor();
      else
        break;
    }
    return neg ? -acc : acc;
  }

  // factor := uint | 'q' ['^' uint] | '(' expr ')'
  Poly parse_factor() {
    skip_ws();
    if (i >= s.size()) throw ParseError("unexpected end of polynomial", i);
    if (eat('(')) {
      Poly e = parse_expr();
      if (!eat(')')) throw ParseError("expected ')'", i);
      return e;
    }
    if (s[i] == 'q') {
      ++i;
      size_t deg = 1;
      if (eat('^')) deg = parse_uint().get_ui();
      return Poly::monomial(Rat(1), deg);
    }
    return Poly(Rat(parse_uint()));
  }
};

}  // namespace

Poly Poly::parse(const std::string& text) {
  PolyParser p(text);
  Poly r = p.parse_expr();
  p.skip_ws();
  if (p.i != text.size()) throw ParseError("trailing characters in polynomial", p.i);
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = coeff_.size(); i-- > 0;) {
    const Rat& c = coeff_[i];
    if (c == 0) continue;
    Rat a = c;
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += (a < 0) ? "-" : "+";
      if (a < 0) a = -a;
    }
    if (i == 0) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str();
      out += "q";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Poly interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
  // Lagrange, exact.
  Poly acc;
  for (size_t i = 0; i < points.size(); ++i) {
    Poly numer(Rat(1));
    Rat denom(1);
    for (size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      numer = numer * Poly(std::vector<Rat>{-points[j].first, Rat(1)});
      denom *= points[i].first - points[j].first;
    }
    acc = acc + numer * Poly(points[i].second / denom);
  }
  return acc;
}

// SHA-256 (FIPS 180-4), straightforward scalar implementation.
namespace {

inline uint32_t rotr(uint32_t x, int n) { return (x >> n) | (x << (32 - n)); }

const uint32_t kSha[64] = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1, 0x923f82a4, 0xab1c5ed5,
    0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174,
    0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
    0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147, 0x06ca6351, 0x14292967,
    0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85,
    0xa2bfe8a1, 0xa81a664b, 0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
    0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f, 0x682e6ff3,
    0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208, 0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};

}  // namespace

std::string sha256_hex(const std::string& data) {
  uint32_t h[8] = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                   0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
  std::string msg = data;
  uint64_t bitlen = uint64_t(data.size()) * 8;
  msg.push_back(char(0x80));
  while (msg.size() % 64 != 56) msg.push_back(0);
  for (int i = 7; i >= 0; --i) msg.push_back(char((bitlen >> (8 * i)) & 0xff));

  for (size_t off = 0; off < msg.size(); off += 64) {
    uint32_t w[64];
    for (int t = 0; t < 16; ++t)
      w[t] = (uint32_t(uint8_t(msg[off + 4 * t])) << 24) | (uint32_t(uint8_t(msg[off + 4 * t + 1])) << 16) |
             (uint32_t(uint8_t(msg[off + 4 * t + 2])) << 8) | uint32_t(uint8_t(msg[off + 4 * t + 3]));
    for (int t = 16; t < 64; ++t) {
      uint32_t s0 = rotr(w[t - 15], 7) ^ rotr(w[t - 15], 18) ^ (w[t - 15] >> 3);
      uint32_t s1 = rotr(w[t - 2], 17) ^ rotr(w[t - 2], 19) ^ (w[t - 2] >> 10);
      w[t] = w[t - 16] + s0 + w[t - 7] + s1;
    }
    uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4], f = h[5], g = h[6], hh = h[7];
    for (int t = 0; t < 64; ++t) {
      uint32_t S1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
      uint32_t ch = (e & f) ^ (~e & g);
      uint32_t t1 = hh + S1 + ch + kSha[t] + w[t];
      uint32_t S0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
      uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
      uint32_t t2 = S0 + maj;
      hh = g; g = f; f = e; e = d + t1; d = c; c = b; b = a; a = t1 + t2;
    }
    h[0] += a; h[1] += b; h[2] += c; h[3] += d; h[4] += e; h[5] += f; h[6] += g; h[7] += hh;
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (uint32_t v : h)
    for (int i = 7; i >= 0; --i) out.push_back(hex[(v >> (4 * i)) & 0xf]);
  return out;
}

}  // namespace green
