#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "greenfn/liealg.hpp"

using namespace green;
using namespace green::liealg;

namespace {

AdjointRep make(const char* lbl) {
  static std::map<std::string, weyl::RootSystem> cache;
  auto it = cache.find(lbl);
  if (it == cache.end()) it = cache.emplace(lbl, weyl::generate_roots(weyl::build_cartan(lbl))).first;
  return build_operators(it->second);
}

}  // namespace

TEST_CASE("operator shapes and dimensions") {
  auto e7 = make("E7");
  CHECK(e7.basis.dimension == 133);
  auto e8 = make("E8");
  CHECK(e8.basis.dimension == 248);

  // e_i column at u_j is |a_ji| in the v_{alpha_i} row, zero elsewhere
  const auto& rs = *e7.rs;
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) {
      int col = e7.basis.pos_of_cartan[j];
      int row = e7.basis.pos_of_root[rs.simple_root(i)];
      long long want = std::abs((long long)rs.cartan.a[j][i]);
      CHECK(e7.e[i].get(row, col) == want);
    }
}

TEST_CASE("chevalley relations hold for the supported types") {
  for (const char* lbl : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6"}) {
    CAPTURE(lbl);
    auto rep = make(lbl);
    auto rr = verify_chevalley_relations(rep);
    CHECK(rr.all());
    CHECK(rr.dimension == rep.basis.dimension);
  }
  CHECK(make("G2").basis.dimension == 14);
  CHECK(make("F4").basis.dimension == 52);
  CHECK(make("E6").basis.dimension == 78);
}

TEST_CASE("mutated operator fails the Serre family") {
  auto rep = make("A2");
  const auto& rs = *rep.rs;
  // bump the string coefficient e_0(v_{alpha_2}) -> v_{alpha_1+alpha_2}
  auto a12 = rs.find_root({1, 1});
  REQUIRE(a12.has_value());
  rep.e[0].add(rep.basis.pos_of_root[*a12], rep.basis.pos_of_root[rs.simple_root(1)], 1);
  auto rr = verify_chevalley_relations(rep);
  CHECK_FALSE(rr.serre);
  CHECK_FALSE(rr.failures.empty());
}

TEST_CASE("canonical basis for G2 and F4") {
  for (const char* lbl : {"G2", "F4"}) {
    CAPTURE(lbl);
    auto rep = make(lbl);
    const auto& rs = *rep.rs;
    canonical_basis(rep, rs.cartan.epsilon);

    // e_{alpha_i} = eps(i) e_i
    for (int i = 0; i < rs.rank; ++i) {
      CHECK(rep.canonical[rs.simple_root(i)] == rep.e[i].scaled(rs.cartan.epsilon[i]));
      CHECK(rep.canonical[rs.negative_of(rs.simple_root(i))] ==
            rep.f[i].scaled(-rs.cartan.epsilon[i]));
    }

    // epsilon flip negates every element
    auto neg = rep;
    std::vector<int> minus;
    for (int v : rs.cartan.epsilon) minus.push_back(-v);
    canonical_basis(neg, minus);
    for (int r = 0; r < rs.root_count(); ++r)
      CHECK(neg.canonical[r] == rep.canonical[r].scaled(-1));

    // pivot choice immaterial
    auto big = rep;
    canonical_basis(big, rs.cartan.epsilon, /*pivot_largest=*/true);
    for (int r = 0; r < rs.root_count(); ++r) CHECK(big.canonical[r] == rep.canonical[r]);

    // nilpotency within the module dimension
    for (int r = 0; r < rs.root_count(); ++r) {
      SpMat p = rep.canonical[r];
      int k = 1;
      while (!p.is_zero() && k <= rep.basis.dimension) {
        p = p * rep.canonical[r];
        ++k;
      }
      CHECK(p.is_zero());
      CHECK(k <= 6);  // adjoint nilpotency degree is tiny
    }
  }
}

TEST_CASE("structure constants N = +-(q+1), exhaustive in F4") {
  auto rep = make("F4");
  const auto& rs = *rep.rs;
  canonical_basis(rep, rs.cartan.epsilon);
  int checked = 0;
  for (int a = 0; a < rs.root_count(); ++a)
    for (int b = 0; b < rs.root_count(); ++b) {
      if (a == b || rs.negative_of(a) == b) continue;
      std::vector<int> sum = rs.roots[a];
      for (int t = 0; t < rs.rank; ++t) sum[t] += rs.roots[b][t];
      if (!rs.find_root(sum)) continue;
      long long n = structure_constant(rep, a, b);
      long long expect = rs.string_q(a, b) + 1;
      CHECK(std::abs(n) == expect);
      ++checked;
    }
  CHECK(checked > 100);
}

TEST_CASE("h eigenvalues are integral weights") {
  auto rep = make("G2");
  const auto& rs = *rep.rs;
  canonical_basis(rep, rs.cartan.epsilon);
  for (int i = 0; i < rs.rank; ++i) {
    for (int r = 0; r < rs.root_count(); ++r) {
      SpMat lhs = rep.h[i].bracket(rep.canonical[r]);
      // eigenvalue = <alpha, alpha_i-coweight> = sum_j alpha_j a_ij
      long long ev = 0;
      for (int j = 0; j < rs.rank; ++j) ev += (long long)rs.cartan.a[i][j] * rs.roots[r][j];
      CHECK((lhs - rep.canonical[r].scaled(ev)).is_zero());
    }
  }
}
