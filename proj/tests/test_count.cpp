#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <random>

#include "greenfn/count.hpp"

using namespace green;
using namespace green::count;
using chevgroup::Context;
using gfp::PackedMatrix;

namespace {
const char* kF4a1 = "x[1,0,0,0](1)*x[0,1,0,0](1)*x[0,1,1,0](1)*x[0,0,1,1](1)";
}

TEST_CASE("identity cell counts unipotent upper-triangular words once") {
  Engine eng = Engine::make("F4", 3, false);
  auto u = eng.ctx->element_from_text(kF4a1).matrix;
  auto id = weyl::identity_element(eng.ctx->roots());
  auto res = count_cell(eng, u, id);
  CHECK(res.fixed == 1);
  CHECK(res.size == 1);
  CHECK(res.done);
}

TEST_CASE("auto filter extracts the simple-root prefix") {
  Engine eng = Engine::make("E6", 3, false);
  const auto& ctx = *eng.ctx;
  auto x18 = chevgroup::parse_word(
      "x[0,0,0,0,1,0](1)*x[0,0,0,1,0,0](1)*x[0,0,1,0,0,0](1)*x[1,0,0,0,0,0](1)*"
      "x[0,0,0,0,0,1](1)*x[1,1,1,1,1,1](1)");
  auto s = auto_filter(ctx, x18);
  REQUIRE(s.size() == 5);
  CHECK(s[0] == ctx.roots().simple_root(4));
  CHECK(s[1] == ctx.roots().simple_root(3));
  CHECK(s[2] == ctx.roots().simple_root(2));
  CHECK(s[3] == ctx.roots().simple_root(0));
  CHECK(s[4] == ctx.roots().simple_root(5));

  // word with a non-simple head: empty filter
  auto other = chevgroup::parse_word("x[1,1,1,1,1,1](1)*x[1,0,0,0,0,0](1)");
  CHECK(auto_filter(ctx, other).empty());
}

TEST_CASE("F4(a_1) representative: 19 cosets up to length 3") {
  CountJob job;
  job.type = "F4";
  job.q = 3;
  job.u_word = kF4a1;
  job.maxlen = 3;
  auto report = count_upto(job);
  CHECK(report.total_fixed == 19);
  CHECK(report.complete);
  CHECK_FALSE(report.covers_whole_group);
  // per-cell bound
  for (const auto& c : report.cells) CHECK(Int((unsigned long)c.fixed) <= c.size);

  // filtered and unfiltered totals agree at this depth
  CountJob fjob = job;
  fjob.filter.kind = FilterSpec::Kind::Auto;
  auto freport = count_upto(fjob);
  CHECK(freport.total_fixed == 19);
  CHECK(freport.cells.size() < report.cells.size());
}

TEST_CASE("determinism across thread counts") {
  for (int threads : {1, 2, 8}) {
    CountJob job;
    job.type = "F4";
    job.q = 3;
    job.u_word = kF4a1;
    job.maxlen = 4;
    job.threads = threads;
    auto report = count_upto(job);
    static std::vector<uint64_t> reference;
    std::vector<uint64_t> counts;
    for (const auto& c : report.cells) counts.push_back(c.fixed);
    if (reference.empty())
      reference = counts;
    else
      CHECK(reference == counts);
  }
}

TEST_CASE("monotonicity and exactness in G2(2)") {
  Engine eng = Engine::make("G2", 2, false);
  // u = x_{alpha_1}(1) x_{theta}(1): some unipotent element of G2(2)
  auto u = eng.ctx->element_from_text("x[1,0](1)*x[0,1](1)").matrix;
  Int prev = 0;
  for (int maxlen = 0; maxlen <= 6; ++maxlen) {
    CountJob job;
    job.type = "G2";
    job.q = 2;
    job.u_word = "x[1,0](1)*x[0,1](1)";
    job.maxlen = maxlen;
    auto rep = count_upto(job);
    CHECK(rep.total_fixed >= prev);
    prev = rep.total_fixed;
    if (maxlen == 6) CHECK(rep.covers_whole_group);
  }
  CHECK(full_coset_count(eng, u) == prev);
}

TEST_CASE("checkpoint: interrupt and resume reproduces the uninterrupted run") {
  namespace fs = std::filesystem;
  auto tmp = fs::temp_directory_path() / "greenfn_ckpt_test.txt";
  fs::remove(tmp);

  CountJob job;
  job.type = "F4";
  job.q = 3;
  job.u_word = kF4a1;
  job.maxlen = 4;

  auto full = count_upto(job);

  // interrupted runs with growing budgets, always resuming the same file
  CountJob interrupted = job;
  interrupted.checkpoint_path = tmp.string();
  interrupted.chunk_budget = 3;
  auto partial = count_upto(interrupted);
  CHECK_FALSE(partial.complete);

  CountJob resume = job;
  resume.checkpoint_path = tmp.string();
  for (int round = 0; round < 50; ++round) {
    resume.chunk_budget = 7;
    auto r = count_upto(resume);
    if (r.complete) break;
  }
  resume.chunk_budget = 0;
  auto final_rep = count_upto(resume);
  CHECK(final_rep.complete);
  CHECK(final_rep.total_fixed == full.total_fixed);
  REQUIRE(final_rep.cells.size() == full.cells.size());
  for (size_t i = 0; i < full.cells.size(); ++i)
    CHECK(final_rep.cells[i].fixed == full.cells[i].fixed);

  // fingerprint mismatch is refused
  CountJob other = job;
  other.maxlen = 5;
  other.checkpoint_path = tmp.string();
  CHECK_THROWS_AS(count_upto(other), ValidationError);
  fs::remove(tmp);
}

TEST_CASE("non-unipotent or non-fixed u is rejected") {
  CountJob job;
  job.type = "G2";
  job.q = 2;
  job.u_word = "h[1,0](1)*x[1,0](1)";  // still unipotent: h(1)=1; try a torus element instead
  job.maxlen = 1;
  CHECK_NOTHROW(count_upto(job));

  CountJob bad = job;
  bad.q = 3;  // over GF(3) the reflection lift has eigenvalue -1: not unipotent
  bad.u_word = "n[1,0](1)";
  CHECK_THROWS(count_upto(bad));
}

TEST_CASE("twisted cells: enumerated v are F-fixed, 2E6 small cells exhaustive") {
  Engine eng = Engine::make("E6", 2, true);
  const auto& ctx = *eng.ctx;
  const auto& rs = ctx.roots();
  const auto& tau = ctx.tau_roots();

  auto gamma_fixed = [&](const weyl::WeylElement& w) {
    for (int r = 0; r < rs.root_count(); ++r)
      if (tau[w.perm[tau[r]]] != w.perm[r]) return false;
    return true;
  };

  auto елements = weyl::enumerate_by_length(rs, 2);
  int cells_checked = 0;
  for (const auto& w : елements) {
    if (!gamma_fixed(w)) continue;
    ++cells_checked;
    // enumerate the digit products exactly as the engine would and check F(v)=v
    auto inv = weyl::inversion_set(rs, w);
    std::vector<bool> seen(inv.size(), false);
    std::vector<std::vector<PackedMatrix>> factors;
    for (size_t i = 0; i < inv.size(); ++i) {
      if (seen[i]) continue;
      int b = inv[i];
      int bd = tau[b];
      seen[i] = true;
      std::vector<PackedMatrix> vals;
      if (bd == b) {
        for (int t = 0; t < 2; ++t) vals.push_back(ctx.root_element(b, uint8_t(t)));
      } else {
        for (size_t j = 0; j < inv.size(); ++j)
          if (inv[j] == bd) seen[j] = true;
        for (int t = 0; t < 4; ++t) {
          uint8_t tq = ctx.field().pow(uint8_t(t), 2);
          vals.push_back(ctx.root_element(b, uint8_t(t)) * ctx.root_element(bd, tq));
        }
      }
      factors.push_back(std::move(vals));
    }
    // all products
    std::vector<PackedMatrix> prods{PackedMatrix::identity(ctx.field(), ctx.dim())};
    for (const auto& vals : factors) {
      std::vector<PackedMatrix> next;
      for (const auto& p : prods)
        for (const auto& v : vals) next.push_back(p * v);
      prods = std::move(next);
    }
    std::set<std::string> distinct;
    for (const auto& v : prods) {
      CHECK(ctx.is_frobenius_fixed(v, eng.frobenius));
      distinct.insert(v.packed_bytes());
    }
    CHECK(distinct.size() == prods.size());  // uniqueness of expression
  }
  CHECK(cells_checked >= 3);
}

TEST_CASE("conjugation invariance of the exact count in G2(2)") {
  Engine eng = Engine::make("G2", 2, false);
  const auto& ctx = *eng.ctx;
  auto u = ctx.element_from_text("x[1,0](1)*x[0,1](1)").matrix;
  Int base = full_coset_count(eng, u);
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> root_d(0, ctx.roots().root_count() - 1);
  for (int trial = 0; trial < 5; ++trial) {
    PackedMatrix g = PackedMatrix::identity(ctx.field(), ctx.dim());
    for (int j = 0; j < 5; ++j) g = g * ctx.root_element(root_d(rng), 1);
    auto конj = g * u * g.inverse();
    CHECK(full_coset_count(eng, конj) == base);
  }
}

TEST_CASE("dry run cost prediction matches the weyl sums") {
  CountJob job;
  job.type = "E6";
  job.q = 3;
  job.u_word = "x[0,0,0,0,1,0](1)";
  job.maxlen = 12;
  job.filter.kind = FilterSpec::Kind::Auto;
  job.u_word =
      "x[0,0,0,0,1,0](1)*x[0,0,0,1,0,0](1)*x[0,0,1,0,0,0](1)*x[1,0,0,0,0,0](1)*"
      "x[0,0,0,0,0,1](1)*x[1,1,1,1,1,1](1)";
  auto cells = dry_run_cells(job);
  CHECK(cells.size() == 47);
  Int total = 0;
  for (auto& [w, sz] : cells) total += sz;
  CHECK(total == 4220491);
}
