#include "greenfn/gfp.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace green::gfp {

FieldSpec::FieldSpec(int p, int k) : p_(p), k_(k), q_(1) {
  bool pok = (p == 2 || p == 3 || p == 5 || p == 7);
  if (!pok || (k != 1 && k != 2))
    throw ValidationError("unsupported field GF(" + std::to_string(p) + "^" + std::to_string(k) + ")");
  for (int i = 0; i < k; ++i) q_ *= p;

  if (k_ == 2) {
    // smallest (c1, c0) with x^2 - c1 x - c0 irreducible, i.e. no root in F_p
    bool found = false;
    for (int c1 = 0; c1 < p && !found; ++c1)
      for (int c0 = 0; c0 < p && !found; ++c0) {
        bool has_root = false;
        for (int x = 0; x < p; ++x)
          if (((x * x - c1 * x - c0) % p + p) % p == 0) has_root = true;
        if (!has_root) {
          mod_c1_ = c1;
          mod_c0_ = c0;
          found = true;
        }
      }
    if (!found) throw ValidationError("no irreducible quadratic found");
  }

  auto mul_el = [&](int a, int b) -> int {
    if (k_ == 1) return (a * b) % p_;
    int a0 = a % p_, a1 = a / p_, b0 = b % p_, b1 = b / p_;
    // (a0 + a1 z)(b0 + b1 z) with z^2 = c1 z + c0
    int lo = (a0 * b0 + mod_c0_ * a1 * b1) % p_;
    int hi = (a0 * b1 + a1 * b0 + mod_c1_ * a1 * b1) % p_;
    return lo + p_ * hi;
  };
  add_.resize(size_t(q_) * q_);
  sub_.resize(size_t(q_) * q_);
  mul_.resize(size_t(q_) * q_);
  neg_.resize(size_t(q_));
  inv_.assign(size_t(q_), 0);
  frob_.resize(size_t(q_));
  for (int a = 0; a < q_; ++a) {
    int a0 = a % p_, a1 = a / p_;
    neg_[size_t(a)] = uint8_t(((p_ - a0) % p_) + p_ * ((p_ - a1) % p_));
    for (int b = 0; b < q_; ++b) {
      int s0 = (a0 + b % p_) % p_, s1 = (a1 + b / p_) % p_;
      add_[idx(uint8_t(a), uint8_t(b))] = uint8_t(s0 + p_ * s1);
      mul_[idx(uint8_t(a), uint8_t(b))] = uint8_t(mul_el(a, b));
    }
  }
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b)
      sub_[idx(uint8_t(a), uint8_t(b))] = add_[idx(uint8_t(a), neg_[size_t(b)])];
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[idx(uint8_t(a), uint8_t(b))] == 1) inv_[size_t(a)] = uint8_t(b);
  for (int a = 0; a < q_; ++a) {
    int r = a;
    for (int i = 1; i < p_; ++i) r = mul_el(r, a);  // a^p
    frob_[size_t(a)] = uint8_t(r);
  }
  check_axioms();
}

void FieldSpec::check_axioms() const {
  // exhaustive for q <= 81 (largest supported q is 49)
  for (int a = 0; a < q_; ++a) {
    if (add(uint8_t(a), 0) != a || mul(uint8_t(a), 1) != a)
      throw ValidationError("field identity axiom failed");
    if (a != 0 && mul(uint8_t(a), inv(uint8_t(a))) != 1)
      throw ValidationError("field inverse axiom failed");
    for (int b = 0; b < q_; ++b) {
      if (add(uint8_t(a), uint8_t(b)) != add(uint8_t(b), uint8_t(a)))
        throw ValidationError("addition not commutative");
      if (mul(uint8_t(a), uint8_t(b)) != mul(uint8_t(b), uint8_t(a)))
        throw ValidationError("multiplication not commutative");
      for (int c = 0; c < q_; ++c) {
        if (mul(mul(uint8_t(a), uint8_t(b)), uint8_t(c)) != mul(uint8_t(a), mul(uint8_t(b), uint8_t(c))))
          throw ValidationError("multiplication not associative");
        if (mul(uint8_t(a), add(uint8_t(b), uint8_t(c))) !=
            add(mul(uint8_t(a), uint8_t(b)), mul(uint8_t(a), uint8_t(c))))
          throw ValidationError("distributivity failed");
      }
    }
  }
}

uint8_t FieldSpec::inv(uint8_t a) const {
  if (a == 0) throw ValidationError("division by zero in GF(" + std::to_string(q_) + ")");
  return inv_[a];
}

uint8_t FieldSpec::pow(uint8_t a, unsigned long e) const {
  uint8_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint8_t FieldSpec::from_int(long v) const {
  long m = ((v % p_) + p_) % p_;
  return uint8_t(m);
}

uint8_t FieldSpec::from_pair(long lo, long hi) const {
  if (k_ == 1 && ((hi % p_) + p_) % p_ != 0) throw ValidationError("scalar not in the prime field");
  long l = ((lo % p_) + p_) % p_;
  long h = ((hi % p_) + p_) % p_;
  return uint8_t(l + p_ * (k_ == 2 ? h : 0));
}

std::string FieldSpec::str(uint8_t a) const {
  if (k_ == 1) return std::to_string(int(a));
  int lo = a % p_, hi = a / p_;
  if (hi == 0) return std::to_string(lo);
  std::string s = (hi == 1) ? "z" : std::to_string(hi) + "z";
  if (lo != 0) s += "+" + std::to_string(lo);
  return s;
}

const FieldSpec& field(int p, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<FieldSpec>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<FieldSpec>(p, k)).first;
  return *it->second;
}

PackedMatrix::PackedMatrix(const FieldSpec& f, int n) : f_(&f), n_(n) {
  if (bitpacked())
    bits_.assign(size_t(n) * size_t(words()), 0);
  else
    bytes_.assign(size_t(n) * size_t(n), 0);
}

PackedMatrix PackedMatrix::identity(const FieldSpec& f, int n) {
  PackedMatrix m(f, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

uint8_t PackedMatrix::get(int r, int c) const {
  if (bitpacked())
    return uint8_t((bits_[size_t(r) * size_t(words()) + size_t(c >> 6)] >> (c & 63)) & 1);
  return bytes_[size_t(r) * size_t(n_) + size_t(c)];
}

void PackedMatrix::set(int r, int c, uint8_t v) {
  if (bitpacked()) {
    uint64_t& w = bits_[size_t(r) * size_t(words()) + size_t(c >> 6)];
    w = (w & ~(uint64_t(1) << (c & 63))) | (uint64_t(v & 1) << (c & 63));
  } else {
    bytes_[size_t(r) * size_t(n_) + size_t(c)] = v;
  }
}

PackedMatrix PackedMatrix::operator*(const PackedMatrix& o) const {
  if (f_ != o.f_ || n_ != o.n_) throw ValidationError("matrix dimension/field mismatch");
  PackedMatrix out(*f_, n_);
  const int n = n_;
  if (bitpacked()) {
    const int w = words();
    for (int i = 0; i < n; ++i) {
      uint64_t* dst = &out.bits_[size_t(i) * size_t(w)];
      const uint64_t* arow = &bits_[size_t(i) * size_t(w)];
      for (int k = 0; k < n; ++k) {
        if ((arow[size_t(k >> 6)] >> (k & 63)) & 1) {
          const uint64_t* brow = &o.bits_[size_t(k) * size_t(w)];
          for (int t = 0; t < w; ++t) dst[size_t(t)] ^= brow[size_t(t)];
        }
      }
    }
    return out;
  }
  if (f_->degree() == 1) {
    // byte lanes with deferred reduction; n*(p-1)^2 stays below 2^16
    const int p = f_->characteristic();
    std::vector<uint16_t> acc(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      std::fill(acc.begin(), acc.end(), uint16_t(0));
      const uint8_t* arow = &bytes_[size_t(i) * size_t(n)];
      for (int k = 0; k < n; ++k) {
        uint16_t v = arow[size_t(k)];
        if (!v) continue;
        const uint8_t* brow = &o.bytes_[size_t(k) * size_t(n)];
        for (int j = 0; j < n; ++j) acc[size_t(j)] = uint16_t(acc[size_t(j)] + v * brow[size_t(j)]);
      }
      uint8_t* dst = &out.bytes_[size_t(i) * size_t(n)];
      for (int j = 0; j < n; ++j) dst[size_t(j)] = uint8_t(acc[size_t(j)] % p);
    }
    return out;
  }
  // k = 2: split into prime-field planes, with z^2 = c1 z + c0 folded in
  const int p = f_->characteristic();
  const FieldSpec& base = gfp::field(p, 1);
  auto plane = [&](const PackedMatrix& m, bool hi) {
    PackedMatrix r(base, m.n_);
    for (int i = 0; i < m.n_; ++i)
      for (int j = 0; j < m.n_; ++j) {
        uint8_t v = m.get(i, j);
        r.set(i, j, uint8_t(hi ? v / p : v % p));
      }
    return r;
  };
  uint8_t z = f_->from_pair(0, 1);
  uint8_t z2 = f_->mul(z, z);
  int c0 = f_->lo_part(z2), c1 = f_->hi_part(z2);
  PackedMatrix a0 = plane(*this, false), a1 = plane(*this, true);
  PackedMatrix b0 = plane(o, false), b1 = plane(o, true);
  PackedMatrix p00 = a0 * b0, p01 = a0 * b1, p10 = a1 * b0, p11 = a1 * b1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int lo = (p00.get(i, j) + c0 * p11.get(i, j)) % p;
      int hi = (p01.get(i, j) + p10.get(i, j) + c1 * p11.get(i, j)) % p;
      out.set(i, j, uint8_t(lo + p * hi));
    }
  return out;
}

PackedMatrix PackedMatrix::operator+(const PackedMatrix& o) const {
  if (f_ != o.f_ || n_ != o.n_) throw ValidationError("matrix dimension/field mismatch");
  PackedMatrix out(*f_, n_);
  if (bitpacked()) {
    for (size_t t = 0; t < bits_.size(); ++t) out.bits_[t] = bits_[t] ^ o.bits_[t];
  } else {
    for (size_t t = 0; t < bytes_.size(); ++t) out.bytes_[t] = f_->add(bytes_[t], o.bytes_[t]);
  }
  return out;
}

PackedMatrix PackedMatrix::operator-(const PackedMatrix& o) const {
  if (f_ != o.f_ || n_ != o.n_) throw ValidationError("matrix dimension/field mismatch");
  PackedMatrix out(*f_, n_);
  if (bitpacked()) {
    for (size_t t = 0; t < bits_.size(); ++t) out.bits_[t] = bits_[t] ^ o.bits_[t];
  } else {
    for (size_t t = 0; t < bytes_.size(); ++t) out.bytes_[t] = f_->sub(bytes_[t], o.bytes_[t]);
  }
  return out;
}

PackedMatrix PackedMatrix::scaled(uint8_t v) const {
  PackedMatrix out(*f_, n_);
  if (bitpacked()) {
    if (v & 1) out.bits_ = bits_;
    return out;
  }
  for (size_t t = 0; t < bytes_.size(); ++t) out.bytes_[t] = f_->mul(bytes_[t], v);
  return out;
}

PackedMatrix PackedMatrix::inverse() const {
  PackedMatrix a = *this;
  PackedMatrix inv = identity(*f_, n_);
  for (int col = 0; col < n_; ++col) {
    int piv = -1;
    for (int r = col; r < n_; ++r)
      if (a.get(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw SingularMatrix();
    if (piv != col)
      for (int c = 0; c < n_; ++c) {
        uint8_t t = a.get(piv, c);
        a.set(piv, c, a.get(col, c));
        a.set(col, c, t);
        t = inv.get(piv, c);
        inv.set(piv, c, inv.get(col, c));
        inv.set(col, c, t);
      }
    uint8_t d = f_->inv(a.get(col, col));
    if (d != 1)
      for (int c = 0; c < n_; ++c) {
        a.set(col, c, f_->mul(a.get(col, c), d));
        inv.set(col, c, f_->mul(inv.get(col, c), d));
      }
    for (int r = 0; r < n_; ++r) {
      if (r == col) continue;
      uint8_t fct = a.get(r, col);
      if (!fct) continue;
      for (int c = 0; c < n_; ++c) {
        a.set(r, c, f_->sub(a.get(r, c), f_->mul(fct, a.get(col, c))));
        inv.set(r, c, f_->sub(inv.get(r, c), f_->mul(fct, inv.get(col, c))));
      }
    }
  }
  return inv;
}

PackedMatrix PackedMatrix::transposed() const {
  PackedMatrix out(*f_, n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) out.set(c, r, get(r, c));
  return out;
}

PackedMatrix PackedMatrix::pow(unsigned long e) const {
  PackedMatrix r = identity(*f_, n_);
  PackedMatrix b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool PackedMatrix::operator==(const PackedMatrix& o) const {
  return f_ == o.f_ && n_ == o.n_ && bits_ == o.bits_ && bytes_ == o.bytes_;
}

bool PackedMatrix::is_identity() const { return *this == identity(*f_, n_); }

bool PackedMatrix::is_diagonal() const {
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c)
      if (r != c && get(r, c) != 0) return false;
  return true;
}

bool PackedMatrix::is_monomial() const {
  for (int r = 0; r < n_; ++r) {
    int nz = 0;
    for (int c = 0; c < n_; ++c)
      if (get(r, c) != 0) ++nz;
    if (nz != 1) return false;
  }
  for (int c = 0; c < n_; ++c) {
    int nz = 0;
    for (int r = 0; r < n_; ++r)
      if (get(r, c) != 0) ++nz;
    if (nz != 1) return false;
  }
  return true;
}

bool PackedMatrix::is_upper_triangular() const {
  if (bitpacked()) {
    const int w = words();
    for (int r = 1; r < n_; ++r) {
      const uint64_t* row = &bits_[size_t(r) * size_t(w)];
      int full = r >> 6;
      for (int t = 0; t < full; ++t)
        if (row[size_t(t)]) return false;
      int rem = r & 63;
      if (rem && (row[size_t(full)] & ((uint64_t(1) << rem) - 1))) return false;
    }
    return true;
  }
  // column-major from the bottom-left corner, first violation exits
  for (int c = 0; c < n_ - 1; ++c)
    for (int r = n_ - 1; r > c; --r)
      if (bytes_[size_t(r) * size_t(n_) + size_t(c)] != 0) return false;
  return true;
}

int PackedMatrix::rank() const {
  PackedMatrix a = *this;
  int rank = 0;
  for (int col = 0; col < n_ && rank < n_; ++col) {
    int piv = -1;
    for (int r = rank; r < n_; ++r)
      if (a.get(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int c = 0; c < n_; ++c) {
        uint8_t t = a.get(piv, c);
        a.set(piv, c, a.get(rank, c));
        a.set(rank, c, t);
      }
    uint8_t d = f_->inv(a.get(rank, col));
    for (int r = rank + 1; r < n_; ++r) {
      uint8_t fct = f_->mul(a.get(r, col), d);
      if (!fct) continue;
      for (int c = col; c < n_; ++c)
        a.set(r, c, f_->sub(a.get(r, c), f_->mul(fct, a.get(rank, c))));
    }
    ++rank;
  }
  return rank;
}

PackedMatrix PackedMatrix::frobenius_entrywise(unsigned long e) const {
  unsigned long p = (unsigned long)f_->characteristic();
  unsigned long steps = 0, v = e;
  if (e == 0) throw ValidationError("frobenius exponent must be a power of p");
  while (v > 1) {
    if (v % p != 0) throw ValidationError("frobenius exponent must be a power of p");
    v /= p;
    ++steps;
  }
  PackedMatrix out = *this;
  if (bitpacked()) return out;  // x^2 = x on GF(2)
  for (size_t t = 0; t < bytes_.size(); ++t) {
    uint8_t x = bytes_[t];
    for (unsigned long s = 0; s < steps; ++s) x = f_->frob(x);
    out.bytes_[t] = x;
  }
  return out;
}

std::vector<int> PackedMatrix::jordan_type() const {
  PackedMatrix nil = *this - identity(*f_, n_);
  PackedMatrix pw = nil;
  unsigned long e = 1;
  while (e < (unsigned long)n_) {
    pw = pw * pw;
    e *= 2;
  }
  for (size_t t = 0; t < pw.bits_.size(); ++t)
    if (pw.bits_[t]) throw NonUnipotent();
  for (size_t t = 0; t < pw.bytes_.size(); ++t)
    if (pw.bytes_[t]) throw NonUnipotent();

  std::vector<int> ranks{n_};  // rank of nil^0
  PackedMatrix cur = nil;
  while (true) {
    int r = cur.rank();
    ranks.push_back(r);
    if (r == 0) break;
    cur = cur * nil;
  }
  std::vector<int> out;
  for (size_t j = 1; j < ranks.size(); ++j) {
    int ge_j = ranks[j - 1] - ranks[j];
    int ge_j1 = (j + 1 < ranks.size()) ? ranks[j] - ranks[j + 1] : 0;
    int exactly_j = ge_j - ge_j1;
    for (int t = 0; t < exactly_j; ++t) out.push_back(int(j));
  }
  std::sort(out.rbegin(), out.rend());
  int total = 0;
  for (int x : out) total += x;
  if (total != n_) throw ValidationError("jordan blocks do not sum to the dimension");
  return out;
}

size_t PackedMatrix::hash() const {
  size_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  for (uint64_t w : bits_) mix(w);
  for (uint8_t b : bytes_) mix(b);
  return h;
}

std::string PackedMatrix::packed_bytes() const {
  std::string s;
  if (bitpacked()) {
    s.reserve(bits_.size() * 8);
    for (uint64_t w : bits_)
      for (int t = 0; t < 8; ++t) s.push_back(char((w >> (8 * t)) & 0xff));
  } else {
    s.assign(bytes_.begin(), bytes_.end());
  }
  return s;
}

std::string PackedMatrix::sparse_triples() const {
  std::string out;
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c)
      if (uint8_t v = get(r, c); v != 0)
        out += std::to_string(r) + " " + std::to_string(c) + " " + f_->str(v) + "\n";
  return out;
}

}  // namespace green::gfp
