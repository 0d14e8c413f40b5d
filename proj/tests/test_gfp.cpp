#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "greenfn/gfp.hpp"

using namespace green;
using namespace green::gfp;

namespace {

// Naive reference multiply straight from the field tables.
PackedMatrix naive_mul(const PackedMatrix& a, const PackedMatrix& b) {
  const FieldSpec& f = a.field();
  PackedMatrix c(f, a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) {
      uint8_t acc = 0;
      for (int k = 0; k < a.size(); ++k) acc = f.add(acc, f.mul(a.get(i, k), b.get(k, j)));
      c.set(i, j, acc);
    }
  return c;
}

PackedMatrix random_matrix(const FieldSpec& f, int n, std::mt19937& rng) {
  PackedMatrix m(f, n);
  std::uniform_int_distribution<int> d(0, f.size() - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, uint8_t(d(rng)));
  return m;
}

PackedMatrix random_invertible(const FieldSpec& f, int n, std::mt19937& rng) {
  for (;;) {
    PackedMatrix m = random_matrix(f, n, rng);
    if (m.rank() == n) return m;
  }
}

}  // namespace

TEST_CASE("field construction and axioms") {
  for (int p : {2, 3, 5, 7})
    for (int k : {1, 2}) {
      const FieldSpec& f = field(p, k);
      CHECK(f.size() == (k == 1 ? p : p * p));
      // frobenius fixes exactly the prime field
      int fixed = 0;
      for (int a = 0; a < f.size(); ++a)
        if (f.frob(uint8_t(a)) == a) ++fixed;
      CHECK(fixed == p);
    }
  CHECK_THROWS_AS(field(11, 1), ValidationError);
  CHECK_THROWS_AS(field(3, 3), ValidationError);
}

TEST_CASE("packed multiply matches the naive oracle") {
  std::mt19937 rng(12345);
  const FieldSpec& f2 = field(2, 1);
  for (int trial = 0; trial < 500; ++trial) {
    auto a = random_matrix(f2, 52, rng), b = random_matrix(f2, 52, rng);
    REQUIRE(a * b == naive_mul(a, b));
  }
  const FieldSpec& f9 = field(3, 2);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_matrix(f9, 10, rng), b = random_matrix(f9, 10, rng);
    REQUIRE(a * b == naive_mul(a, b));
  }
  // broad randomized sweep across every supported field
  for (int p : {2, 3, 5, 7})
    for (int k : {1, 2}) {
      const FieldSpec& f = field(p, k);
      for (int trial = 0; trial < 40; ++trial) {
        auto a = random_matrix(f, 17, rng), b = random_matrix(f, 17, rng);
        REQUIRE(a * b == naive_mul(a, b));
      }
    }
}

TEST_CASE("identity and inverse") {
  std::mt19937 rng(99);
  for (int p : {2, 3, 5}) {
    const FieldSpec& f = field(p, 1);
    auto id = PackedMatrix::identity(f, 20);
    CHECK(id.inverse() == id);
    auto a = random_matrix(f, 20, rng);
    CHECK(a * id == a);
    auto x = random_invertible(f, 12, rng), y = random_invertible(f, 12, rng);
    CHECK((x * y).inverse() == y.inverse() * x.inverse());
    CHECK((x * x.inverse()).is_identity());
  }
  // unipotent upper triangular input -> unipotent upper triangular inverse
  const FieldSpec& f3 = field(3, 1);
  PackedMatrix u = PackedMatrix::identity(f3, 6);
  u.set(0, 3, 2);
  u.set(1, 2, 1);
  u.set(2, 5, 2);
  auto ui = u.inverse();
  CHECK(ui.is_upper_triangular());
  for (int i = 0; i < 6; ++i) CHECK(ui.get(i, i) == 1);
  // singular input
  PackedMatrix z(f3, 4);
  CHECK_THROWS_AS(z.inverse(), SingularMatrix);
}

TEST_CASE("upper triangular predicate") {
  const FieldSpec& f3 = field(3, 1);
  CHECK(PackedMatrix::identity(f3, 9).is_upper_triangular());
  PackedMatrix d = PackedMatrix::identity(f3, 9);
  d.set(4, 4, 2);
  CHECK(d.is_upper_triangular());
  d.set(7, 2, 1);
  CHECK_FALSE(d.is_upper_triangular());

  const FieldSpec& f2 = field(2, 1);
  PackedMatrix b = PackedMatrix::identity(f2, 70);
  b.set(3, 69, 1);
  CHECK(b.is_upper_triangular());
  b.set(69, 3, 1);
  CHECK_FALSE(b.is_upper_triangular());
}

TEST_CASE("rank invariants") {
  std::mt19937 rng(7);
  const FieldSpec& f5 = field(5, 1);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_matrix(f5, 15, rng);
    CHECK(a.rank() == a.transposed().transposed().rank());
    CHECK(a.transposed().rank() == a.rank());
  }
}

TEST_CASE("jordan type") {
  const FieldSpec& f3 = field(3, 1);
  CHECK(PackedMatrix::identity(f3, 8).jordan_type() == std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1});

  // a single nilpotent chain of length 4 plus fixed space
  PackedMatrix u = PackedMatrix::identity(f3, 7);
  u.set(0, 1, 1);
  u.set(1, 2, 1);
  u.set(2, 3, 1);
  CHECK(u.jordan_type() == std::vector<int>{4, 1, 1, 1});

  // non-unipotent input is rejected
  PackedMatrix s = PackedMatrix::identity(f3, 3);
  s.set(0, 0, 2);
  CHECK_THROWS_AS(s.jordan_type(), NonUnipotent);

  // conjugation invariance
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = random_invertible(f3, 7, rng);
    auto conj = g * u * g.inverse();
    CHECK(conj.jordan_type() == u.jordan_type());
  }
}

TEST_CASE("entrywise frobenius") {
  const FieldSpec& f3 = field(3, 1);
  std::mt19937 rng(11);
  auto a = random_matrix(f3, 10, rng);
  CHECK(a.frobenius_entrywise(3) == a);  // t^p = t on the prime field

  const FieldSpec& f9 = field(3, 2);
  auto b = random_matrix(f9, 10, rng), c = random_matrix(f9, 10, rng);
  auto fb = b.frobenius_entrywise(3);
  // nontrivial automorphism: squares to the identity map
  CHECK(fb.frobenius_entrywise(3) == b);
  bool moved = false;
  for (int i = 0; i < 10 && !moved; ++i)
    for (int j = 0; j < 10 && !moved; ++j)
      if (fb.get(i, j) != b.get(i, j)) moved = true;
  CHECK(moved);
  // ring homomorphism
  CHECK((b * c).frobenius_entrywise(3) == fb * c.frobenius_entrywise(3));
  CHECK((b + c).frobenius_entrywise(3) == fb + c.frobenius_entrywise(3));

  CHECK_THROWS_AS(a.frobenius_entrywise(6), ValidationError);
}
