#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "greenfn/chevgroup.hpp"

using namespace green;
using namespace green::chevgroup;
using gfp::PackedMatrix;

TEST_CASE("word grammar round-trip and errors") {
  const char* txt = "x[1,0,0,0](1)*x[0,1,0,0](1)*x[0,1,1,0](1)*x[0,0,1,1](1)";
  auto w = parse_word(txt);
  CHECK(w.factors.size() == 4);
  CHECK(print_word(w) == txt);
  CHECK(parse_word(print_word(w)).factors.size() == 4);

  auto w2 = parse_word("x[1,0](2z+1)*h[0,1](z)*n[1,1](-1)");
  CHECK(print_word(w2) == "x[1,0](2z+1)*h[0,1](z)*n[1,1](-1)");

  CHECK(parse_word("").factors.empty());
  CHECK_THROWS_AS(parse_word("y[1](1)"), ParseError);
  CHECK_THROWS_AS(parse_word("x[1,0](1"), ParseError);
  CHECK_THROWS_AS(parse_word("x[1,0](1)!"), ParseError);

  const auto& f4 = Context::get("F4", 3, 1);
  CHECK_THROWS_AS(f4.element_from_text("x[9,9,9,9](1)"), ParseError);
  CHECK(f4.element_from_text("").matrix.is_identity());
}

TEST_CASE("root elements: one-parameter subgroups and triangularity") {
  const auto& g2 = Context::get("G2", 3, 1);
  const auto& rs = g2.roots();
  for (int r = 0; r < rs.root_count(); ++r) {
    CHECK(g2.root_element(r, 0).is_identity());
    for (uint8_t s = 0; s < 3; ++s)
      for (uint8_t t = 0; t < 3; ++t) {
        auto prod = g2.root_element(r, s) * g2.root_element(r, t);
        CHECK(prod == g2.root_element(r, g2.field().add(s, t)));
      }
    if (rs.is_positive(r)) {
      CHECK(g2.root_element(r, 1).is_upper_triangular());
    } else {
      CHECK_FALSE(g2.root_element(r, 1).is_upper_triangular());
      CHECK(g2.root_element(r, 1).transposed().is_upper_triangular());
    }
  }
}

TEST_CASE("torus elements diagonal, exhaustive F4 over GF(3)") {
  const auto& f4 = Context::get("F4", 3, 1);
  const auto& rs = f4.roots();
  for (int r = 0; r < rs.root_count(); ++r)
    for (uint8_t t = 1; t < 3; ++t) {
      auto h = f4.torus_element(r, t);
      CHECK(h.is_diagonal());
      CHECK(f4.torus_element(r, 1).is_identity());
      auto n = f4.weyl_rep(r, t);
      CHECK(f4.permutes_root_lines(n));
    }
  CHECK_THROWS_AS(f4.torus_element(0, 0), ValidationError);
}

TEST_CASE("weyl conjugation of root subgroups") {
  const auto& g2 = Context::get("G2", 3, 1);
  const auto& rs = g2.roots();
  // n_alpha(1) x_beta(t) n_alpha(1)^-1 = x_{s_alpha(beta)}(+-t)
  for (int i = 0; i < rs.rank; ++i) {
    auto n = g2.weyl_rep(rs.simple_root(i), 1);
    auto ninv = n.inverse();
    for (int b = 0; b < rs.root_count(); ++b) {
      for (uint8_t t = 1; t < 3; ++t) {
        auto conj = n * g2.root_element(b, t) * ninv;
        int target = rs.reflection[i][b];
        bool plus = conj == g2.root_element(target, t);
        bool minus = conj == g2.root_element(target, g2.field().neg(t));
        CHECK((plus || minus));
      }
    }
  }
}

TEST_CASE("wdot maps root lines per the permutation, G2") {
  const auto& g2 = Context::get("G2", 3, 1);
  const auto& rs = g2.roots();
  const auto& mb = g2.rep().basis;
  auto all = weyl::enumerate_by_length(rs, -1);
  for (const auto& w : all) {
    auto nd = g2.wdot(w);
    CHECK(g2.permutes_root_lines(nd));
    CHECK(g2.wdot(weyl::identity_element(rs)).is_identity());
    for (int r = 0; r < rs.root_count(); ++r) {
      int src = mb.pos_of_root[r];
      int dst = mb.pos_of_root[w.perm[r]];
      // column src must be supported exactly on row dst
      for (int row = 0; row < g2.dim(); ++row) {
        if (row == dst)
          CHECK(nd.get(row, src) != 0);
        else if (mb.basis_root[row] >= 0 || mb.basis_cartan[row] >= 0)
          CHECK(nd.get(row, src) == 0);
      }
    }
  }
}

TEST_CASE("split frobenius on root elements") {
  const auto& f4 = Context::get("F4", 3, 1);
  FrobeniusSpec fr{3, false};
  // x_alpha(t) -> x_alpha(t^q); over GF(3) everything is fixed
  for (int r = 0; r < f4.roots().root_count(); ++r)
    for (uint8_t t = 0; t < 3; ++t)
      CHECK(f4.is_frobenius_fixed(f4.root_element(r, t), fr));

  // over GF(9), x_alpha(t) -> x_alpha(t^3)
  const auto& e6 = Context::get("E6", 3, 2);
  FrobeniusSpec fr9{3, false};
  for (uint8_t t = 0; t < 9; ++t) {
    auto lhs = e6.frobenius(e6.root_element(5, t), fr9);
    CHECK(lhs == e6.root_element(5, e6.field().pow(t, 3)));
  }
}

TEST_CASE("twisted frobenius: tau conjugation and fixed root elements") {
  const auto& e6 = Context::get("E6", 3, 2);
  const auto& rs = e6.roots();
  const auto& tau = e6.tau();
  CHECK((tau * tau).is_identity());
  // tau x_alpha(t) tau = x_{alpha^dagger}(t), exhaustive over simple roots
  for (int i = 0; i < rs.rank; ++i) {
    int r = rs.simple_root(i);
    for (uint8_t t = 0; t < 9; ++t)
      CHECK(tau * e6.root_element(r, t) * tau ==
            e6.root_element(e6.tau_roots()[r], t));
  }

  FrobeniusSpec fr{3, true};
  for (int r = 0; r < rs.root_count(); ++r) {
    int rd = e6.tau_roots()[r];
    if (rd == r) {
      // t in F_q: fixed
      for (uint8_t t = 0; t < 3; ++t)
        CHECK(e6.is_frobenius_fixed(e6.root_element(r, t), fr));
    } else {
      for (uint8_t t = 0; t < 9; ++t) {
        auto pair = e6.root_element(r, t) * e6.root_element(rd, e6.field().pow(t, 3));
        CHECK(e6.is_frobenius_fixed(pair, fr));
      }
    }
  }

  // frobenius is a homomorphism on random words of generators
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> root_d(0, rs.root_count() - 1);
  std::uniform_int_distribution<int> t_d(0, 8);
  for (int trial = 0; trial < 20; ++trial) {
    PackedMatrix a = PackedMatrix::identity(e6.field(), e6.dim());
    PackedMatrix b = a;
    for (int j = 0; j < 4; ++j) {
      a = a * e6.root_element(root_d(rng), uint8_t(t_d(rng)));
      b = b * e6.root_element(root_d(rng), uint8_t(t_d(rng)));
    }
    CHECK(e6.frobenius(a * b, fr) == e6.frobenius(a, fr) * e6.frobenius(b, fr));
  }
}

TEST_CASE("jordan types of the F4 representative words over GF(3)") {
  const auto& f4 = Context::get("F4", 3, 1);
  auto a3 = f4.element_from_text("x[1,1,0,0](1)*x[0,1,2,0](-1)*x[0,1,2,2](1)*x[1,1,2,2](-1)");
  CHECK(a3.matrix.jordan_type() == std::vector<int>{7, 6, 6, 5, 5, 5, 3, 3, 3, 3, 3, 3});

  auto c3a1 = f4.element_from_text("x[0,1,0,0](1)*x[0,0,0,1](1)*x[0,1,2,0](1)");
  CHECK(c3a1.matrix.jordan_type() ==
        std::vector<int>{7, 6, 6, 5, 4, 4, 4, 4, 3, 3, 3, 1, 1, 1});
}

TEST_CASE("torus orbits of sign variants") {
  const auto& f4 = Context::get("F4", 3, 1);
  // all 16 sign choices of the F4(a_1) word form a single orbit
  std::vector<WordSpec> variants;
  const char* roots_a1[4] = {"1,0,0,0", "0,1,0,0", "0,1,1,0", "0,0,1,1"};
  for (int mask = 0; mask < 16; ++mask) {
    std::string txt;
    for (int j = 0; j < 4; ++j) {
      if (j) txt += "*";
      txt += std::string("x[") + roots_a1[j] + "](" + ((mask >> j) & 1 ? "-1" : "1") + ")";
    }
    variants.push_back(parse_word(txt));
  }
  auto orbits = f4.torus_orbits(variants);
  CHECK(orbits.size() == 1);

  // C3(a_1) variants fall into exactly two orbits
  std::vector<WordSpec> v2;
  const char* roots_c3[3] = {"0,1,0,0", "0,0,0,1", "0,1,2,0"};
  for (int mask = 0; mask < 8; ++mask) {
    std::string txt;
    for (int j = 0; j < 3; ++j) {
      if (j) txt += "*";
      txt += std::string("x[") + roots_c3[j] + "](" + ((mask >> j) & 1 ? "-1" : "1") + ")";
    }
    v2.push_back(parse_word(txt));
  }
  auto orbits2 = f4.torus_orbits(v2);
  CHECK(orbits2.size() == 2);
  // the two elements u+ and u- represent different orbits
  auto up = parse_word("x[0,1,0,0](1)*x[0,0,0,1](1)*x[0,1,2,0](1)");
  auto um = parse_word("x[0,1,0,0](1)*x[0,0,0,1](1)*x[0,1,2,0](-1)");
  auto both = f4.torus_orbits({up, um});
  CHECK(both.size() == 2);

  // a single word is one orbit
  CHECK(f4.torus_orbits({up}).size() == 1);
}

TEST_CASE("upper unitriangular words stay upper unitriangular") {
  for (const char* lbl : {"G2", "F4"}) {
    const auto& ctx = Context::get(lbl, 3, 1);
    const auto& rs = ctx.roots();
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> root_d(0, rs.positive_count - 1);
    std::uniform_int_distribution<int> t_d(0, 2);
    for (int trial = 0; trial < 25; ++trial) {
      PackedMatrix m = PackedMatrix::identity(ctx.field(), ctx.dim());
      for (int j = 0; j < 6; ++j) m = m * ctx.root_element(root_d(rng), uint8_t(t_d(rng)));
      CHECK(m.is_upper_triangular());
    }
  }
}

TEST_CASE("wdot conjugation sends root elements to root elements, G2 exhaustive l<=3") {
  const auto& g2 = Context::get("G2", 2, 1);
  const auto& rs = g2.roots();
  auto all = weyl::enumerate_by_length(rs, 3);
  for (const auto& w : all) {
    auto nd = g2.wdot(w);
    auto ndinv = nd.inverse();
    auto winv = weyl::inverse(rs, w);
    for (int b = 0; b < rs.root_count(); ++b)
      for (uint8_t t = 1; t < 2; ++t) {
        auto conj = ndinv * g2.root_element(b, t) * nd;
        int target = winv.perm[b];
        bool plus = conj == g2.root_element(target, t);
        bool minus = conj == g2.root_element(target, g2.field().neg(t));
        CHECK((plus || minus));
      }
  }
}
