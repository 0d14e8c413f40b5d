#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "greenfn/numeric.hpp"

namespace green::gfp {

struct SingularMatrix : std::runtime_error {
  SingularMatrix() : std::runtime_error("matrix is singular") {}
};

struct NonUnipotent : std::runtime_error {
  NonUnipotent() : std::runtime_error("element is not unipotent") {}
};

/// GF(p^k) for p in {2,3,5,7}, k in {1,2}.  Elements are encoded 0..q-1;
/// for k=2 the encoding is lo + p*hi representing lo + hi*z where z is a
/// root of the lexicographically smallest irreducible monic quadratic.
/// Field axioms are checked exhaustively on construction.
class FieldSpec {
 public:
  FieldSpec(int p, int k);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int size() const { return q_; }

  uint8_t add(uint8_t a, uint8_t b) const { return add_[idx(a, b)]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return sub_[idx(a, b)]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[idx(a, b)]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t inv(uint8_t a) const;
  uint8_t frob(uint8_t a) const { return frob_[a]; }  // x -> x^p
  uint8_t pow(uint8_t a, unsigned long e) const;

  /// canonical embedding of an integer (reduces mod p into the prime field)
  uint8_t from_int(long v) const;
  /// element from (lo, hi): lo + hi*z; hi must be 0 when k=1
  uint8_t from_pair(long lo, long hi) const;
  int lo_part(uint8_t a) const { return a % p_; }
  int hi_part(uint8_t a) const { return a / p_; }

  std::string str(uint8_t a) const;

  bool operator==(const FieldSpec& o) const { return p_ == o.p_ && k_ == o.k_; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

 private:
  size_t idx(uint8_t a, uint8_t b) const { return size_t(a) * size_t(q_) + b; }
  void check_axioms() const;
  int p_, k_, q_;
  int mod_c0_ = 0, mod_c1_ = 0;  // z^2 = c1*z + c0
  std::vector<uint8_t> add_, sub_, mul_, neg_, inv_, frob_;
};

/// Shared immutable field registry.
const FieldSpec& field(int p, int k);

/// Dense square matrix over a small field.  GF(2) rows are bit-packed into
/// 64-bit words; other fields use one byte per entry.
class PackedMatrix {
 public:
  PackedMatrix() = default;
  PackedMatrix(const FieldSpec& f, int n);
  static PackedMatrix identity(const FieldSpec& f, int n);

  int size() const { return n_; }
  const FieldSpec& field() const { return *f_; }

  uint8_t get(int r, int c) const;
  void set(int r, int c, uint8_t v);

  PackedMatrix operator*(const PackedMatrix& o) const;
  PackedMatrix operator+(const PackedMatrix& o) const;
  PackedMatrix operator-(const PackedMatrix& o) const;
  PackedMatrix scaled(uint8_t v) const;
  PackedMatrix inverse() const;  // throws SingularMatrix
  PackedMatrix transposed() const;
  PackedMatrix pow(unsigned long e) const;

  bool operator==(const PackedMatrix& o) const;
  bool operator!=(const PackedMatrix& o) const { return !(*this == o); }
  bool is_identity() const;
  bool is_diagonal() const;
  bool is_monomial() const;  // exactly one nonzero per row and column

  /// true iff every entry strictly below the diagonal is zero;
  /// scans from the bottom-left, column-major, and exits on the first hit
  bool is_upper_triangular() const;

  int rank() const;
  /// entrywise e-th power; e must be a power of the characteristic
  PackedMatrix frobenius_entrywise(unsigned long e) const;

  /// Jordan block sizes of a unipotent matrix, decreasing; throws NonUnipotent.
  std::vector<int> jordan_type() const;

  size_t hash() const;
  std::string packed_bytes() const;  // canonical byte serialisation (hash keys)
  std::string sparse_triples() const;  // "row col value" lines, 0-based

 private:
  bool bitpacked() const { return f_->size() == 2; }
  int words() const { return (n_ + 63) / 64; }
  const FieldSpec* f_ = nullptr;
  int n_ = 0;
  std::vector<uint64_t> bits_;   // bit-packed rows (GF(2))
  std::vector<uint8_t> bytes_;   // row-major bytes (other fields)
};

}  // namespace green::gfp
