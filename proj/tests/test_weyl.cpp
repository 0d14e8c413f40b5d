#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "greenfn/weyl.hpp"

using namespace green;
using namespace green::weyl;

TEST_CASE("cartan matrices and epsilon") {
  auto g2 = build_cartan("G2");
  CHECK(g2.a == std::vector<std::vector<int>>{{2, -1}, {-3, 2}});
  CHECK(g2.epsilon == std::vector<int>{1, -1});

  auto b3 = build_cartan("B3");
  CHECK(b3.a == std::vector<std::vector<int>>{{2, -2, 0}, {-1, 2, -1}, {0, -1, 2}});

  auto b2 = build_cartan("B2");
  CHECK(b2.a == std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
  CHECK(b2.epsilon == std::vector<int>{1, -1});

  // bipartite colouring must hold on every edge for every supported type
  for (const char* lbl : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8"}) {
    auto cd = build_cartan(lbl);
    for (int i = 0; i < cd.rank; ++i)
      for (int j = 0; j < cd.rank; ++j)
        if (i != j && cd.a[i][j] != 0) CHECK(cd.epsilon[i] == -cd.epsilon[j]);
  }

  CHECK(build_cartan("E6").epsilon == std::vector<int>{1, -1, -1, 1, -1, 1});
  CHECK(build_cartan("E8").epsilon == std::vector<int>{1, -1, -1, 1, -1, 1, -1, 1});

  CHECK_THROWS_AS(build_cartan("H3"), ParseError);
  CHECK_THROWS_AS(build_cartan("Q9"), ParseError);
}

TEST_CASE("root generation") {
  auto b2 = generate_roots(build_cartan("B2"));
  std::set<std::vector<int>> got(b2.roots.begin(), b2.roots.end());
  std::set<std::vector<int>> want = {{1, 0}, {0, 1}, {1, 1}, {2, 1},
                                     {-1, 0}, {0, -1}, {-1, -1}, {-2, -1}};
  CHECK(got == want);
  CHECK(b2.positive_count == 4);

  auto g2 = generate_roots(build_cartan("G2"));
  CHECK(g2.root_count() == 12);

  auto e8 = generate_roots(build_cartan("E8"));
  CHECK(e8.root_count() == 240);
  CHECK(e8.positive_count == 120);

  // closure sanity for the full supported list
  CHECK(generate_roots(build_cartan("F4")).root_count() == 48);
  CHECK(generate_roots(build_cartan("E6")).root_count() == 72);
  CHECK(generate_roots(build_cartan("E7")).root_count() == 126);

  // positives ordered by (height, lex)
  for (int r = 0; r + 1 < g2.positive_count; ++r) {
    CHECK(g2.height[r] <= g2.height[r + 1]);
    if (g2.height[r] == g2.height[r + 1]) CHECK(g2.roots[r] < g2.roots[r + 1]);
  }
}

TEST_CASE("inversion sets") {
  auto g2 = generate_roots(build_cartan("G2"));
  CHECK(inversion_set(g2, identity_element(g2)).empty());
  for (int i = 0; i < 2; ++i) {
    auto inv = inversion_set(g2, simple_reflection(g2, i));
    REQUIRE(inv.size() == 1);
    CHECK(inv[0] == g2.simple_root(i));
  }
  auto all = enumerate_by_length(g2, -1);
  CHECK(all.size() == 12);
  auto longest = *std::max_element(all.begin(), all.end(),
                                   [](auto& a, auto& b) { return a.length < b.length; });
  CHECK(longest.length == 6);
  CHECK(inversion_set(g2, longest).size() == 6);
}

TEST_CASE("length equals inversion count and word independence, small types") {
  for (const char* lbl : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
    auto rs = generate_roots(build_cartan(lbl));
    auto all = enumerate_by_length(rs, 6);
    for (const auto& w : all) {
      CHECK(w.length == int(inversion_set(rs, w).size()));
      CHECK(int(w.word.size()) == w.length);
      // rebuild from the canonical word; permutation must agree
      CHECK(element_from_word(rs, w.word).perm == w.perm);
    }
  }
}

TEST_CASE("E6 enumeration goldens") {
  auto e6 = generate_roots(build_cartan("E6"));
  auto all = enumerate_by_length(e6, 12);
  CHECK(all.size() == 8335);
  Int sum3 = 0;
  for (const auto& w : all) sum3 += pow_int(3, (unsigned long)w.length);
  CHECK(sum3 == 1569060811);

  EnumerationOptions opts;
  // alpha_5, alpha_4, alpha_3, alpha_1, alpha_6 (1-based labels)
  opts.keep_positive = std::vector<RootIndex>{e6.simple_root(4), e6.simple_root(3),
                                              e6.simple_root(2), e6.simple_root(0),
                                              e6.simple_root(5)};
  auto filtered = enumerate_by_length(e6, 12, opts);
  CHECK(filtered.size() == 47);
  Int cosets = 0;
  for (const auto& w : filtered) cosets += pow_int(3, (unsigned long)w.length);
  CHECK(cosets == 4220491);

  // filtered enumeration is a subset with the required positivity
  std::set<std::vector<uint16_t>> big;
  for (auto& w : all) big.insert(w.perm);
  for (auto& w : filtered) {
    CHECK(big.count(w.perm) == 1);
    for (RootIndex a : *opts.keep_positive) CHECK(e6.is_positive(w.perm[a]));
  }
}

TEST_CASE("poincare data") {
  auto g2 = generate_roots(build_cartan("G2"));
  auto pd = poincare(g2);
  CHECK(pd.degrees == std::vector<int>{2, 6});
  CHECK(pd.group_size == 12);
  CHECK(pd.weyl_sum_q(2) == 189);
  CHECK(pd.group_order(2) == 12096);

  auto e6 = generate_roots(build_cartan("E6"));
  auto pe6 = poincare(e6);
  CHECK(pe6.group_size == 51840);
  CHECK(pe6.degrees == std::vector<int>{2, 5, 6, 8, 9, 12});

  auto f4 = generate_roots(build_cartan("F4"));
  auto pf4 = poincare(f4);
  CHECK(pf4.group_size == 1152);
  CHECK(pf4.degrees == std::vector<int>{2, 6, 8, 12});

  // coefficientwise Poincare identity: sum_w t^l(w) * (t-1)^rank = prod (t^d_i - 1)
  for (auto* pdp : {&pd, &pf4, &pe6}) {
    std::vector<Rat> c;
    for (const Int& x : pdp->coefficients) c.emplace_back(x);
    Poly lhs{std::move(c)};
    Poly tm1{std::vector<Rat>{Rat(-1), Rat(1)}};
    for (size_t i = 0; i < pdp->degrees.size(); ++i) lhs = lhs * tm1;
    Poly rhs(Rat(1));
    for (int d : pdp->degrees) rhs = rhs * (Poly::monomial(Rat(1), size_t(d)) - Poly(Rat(1)));
    CHECK(lhs == rhs);
  }

  // bundled degrees for E7/E8
  CHECK(poincare(generate_roots(build_cartan("E7"))).group_size == 2903040);
  CHECK(poincare(generate_roots(build_cartan("E8"))).group_size == 696729600);
}

TEST_CASE("conjugacy classes") {
  auto g2 = generate_roots(build_cartan("G2"));
  auto cc = conjugacy_classes(g2);
  CHECK(cc.classes.size() == 6);
  Int total = 0;
  for (auto& c : cc.classes) total += c.size;
  CHECK(total == 12);

  auto a1 = generate_roots(build_cartan("A1"));
  auto cca1 = conjugacy_classes(a1);
  REQUIRE(cca1.classes.size() == 2);
  CHECK(cca1.classes[0].size == 1);
  CHECK(cca1.classes[1].size == 1);

  auto f4 = generate_roots(build_cartan("F4"));
  CHECK(conjugacy_classes(f4).classes.size() == 25);
}

TEST_CASE("torus orders and Steinberg identity") {
  auto a1 = generate_roots(build_cartan("A1"));
  auto s = simple_reflection(a1, 0);  // Coxeter element of A1
  CHECK(torus_order(a1, s, 3) == 4);
  CHECK(torus_order(a1, identity_element(a1), 3) == 2);  // (q-1)^rank

  for (const char* lbl : {"G2", "F4"}) {
    auto rs = generate_roots(build_cartan(lbl));
    auto pd = poincare(rs);
    auto all = enumerate_by_length(rs, -1);
    for (int q : {2, 3, 4, 5}) {
      Int sum = 0;
      Int gord = pd.group_order(q);
      for (const auto& w : all) {
        Int t = torus_order(rs, w, q);
        REQUIRE(t > 0);
        REQUIRE(gord % t == 0);
        sum += gord / t;
      }
      CHECK(sum % Int(all.size()) == 0);
      CHECK(sum / Int(all.size()) == pow_int(q, 2ul * (unsigned long)pd.positive_count));
    }
  }
}

TEST_CASE("diagram involution for E6") {
  auto e6 = generate_roots(build_cartan("E6"));
  // 1<->6, 3<->5, 2 and 4 fixed (0-based: 0<->5, 2<->4)
  auto tau = diagram_involution(e6, {5, 1, 4, 3, 2, 0});
  CHECK(tau[e6.simple_root(0)] == e6.simple_root(5));
  CHECK(tau[e6.simple_root(1)] == e6.simple_root(1));
  int fixed = 0;
  for (int r = 0; r < e6.root_count(); ++r)
    if (tau[r] == r) ++fixed;
  CHECK(fixed > 0);
  CHECK_THROWS(diagram_involution(e6, {1, 0, 2, 3, 4, 5}));  // not a diagram symmetry
}
