// Regenerates the bundled data files under data/: Weyl character tables
// (computed by class-sum splitting), the G2 Springer tables (transcribed
// block data), and the F4 p=3 Springer table.  The F4 assignment is derived
// by a constraint search: it is the block/d layout for which the
// Lusztig-Shoji recursion has an integral nonnegative solution whose
// Q_1 coefficients reproduce the published coset-count polynomials.
#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "greenfn/burnside.hpp"
#include "greenfn/lusztig.hpp"
#include "greenfn/weyl.hpp"

using namespace green;

namespace {

std::string class_label(const weyl::WeylElement& w) {
  if (w.word.empty()) return "e";
  std::string s;
  for (int i : w.word) s += std::to_string(i + 1);
  return s;
}

std::string word_field(const std::vector<int>& word) {
  if (word.empty()) return "-";
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(word[i] + 1);
  }
  return s;
}

struct NamedTable {
  burnside::RawTable raw;
  std::vector<std::string> char_labels;
  std::vector<std::string> class_labels;
};

NamedTable build_named(const std::string& type) {
  auto rs = weyl::generate_roots(weyl::build_cartan(type));
  NamedTable nt;
  nt.raw = burnside::compute_table(rs);
  for (const auto& c : nt.raw.classes.classes)
    nt.class_labels.push_back(class_label(c.representative));

  if (type == "G2") {
    // E_{d,b}; the primes follow the trace at the long-root reflection s_1
    size_t s1_class = SIZE_MAX;
    for (size_t c = 0; c < nt.raw.classes.classes.size(); ++c)
      if (nt.raw.classes.classes[c].representative.word == std::vector<int>{0}) s1_class = c;
    for (size_t ch = 0; ch < nt.raw.values.size(); ++ch) {
      int d = nt.raw.dims[ch], b = nt.raw.b_invariant[ch];
      std::string label = "E" + std::to_string(d) + "_" + std::to_string(b);
      if (d == 1 && b == 3) label += (nt.raw.values[ch][s1_class] == -1) ? "p" : "pp";
      nt.char_labels.push_back(label);
    }
  } else {
    std::map<std::pair<int, int>, int> seen, total;
    for (size_t ch = 0; ch < nt.raw.values.size(); ++ch)
      total[{nt.raw.dims[ch], nt.raw.b_invariant[ch]}]++;
    for (size_t ch = 0; ch < nt.raw.values.size(); ++ch) {
      auto key = std::make_pair(nt.raw.dims[ch], nt.raw.b_invariant[ch]);
      std::string label = "phi" + std::to_string(key.first) + "_" + std::to_string(key.second);
      if (total[key] > 1) label += char('a' + seen[key]);
      seen[key]++;
      nt.char_labels.push_back(label);
    }
  }
  return nt;
}

void emit_chartable(const NamedTable& nt, const std::string& type,
                    const std::vector<std::pair<std::string, std::string>>& aliases,
                    const std::string& path) {
  std::ofstream out(path);
  out << "# character table of W(" << type << "); classes labelled by canonical\n";
  out << "# representative words; regenerate with: tablegen emit <datadir>\n";
  out << "type " << type << "\n";
  for (size_t c = 0; c < nt.class_labels.size(); ++c)
    out << "class " << nt.class_labels[c] << " size=" << nt.raw.classes.classes[c].size.get_str()
        << " word=" << word_field(nt.raw.classes.classes[c].representative.word) << "\n";
  for (size_t ch = 0; ch < nt.char_labels.size(); ++ch) {
    out << "char " << nt.char_labels[ch] << " dim=" << nt.raw.dims[ch] << " values=";
    for (size_t c = 0; c < nt.class_labels.size(); ++c)
      out << (c ? " " : "") << nt.raw.values[ch][c].get_str();
    out << "\n";
  }
  for (const auto& [from, to] : aliases) out << "alias " << from << " " << to << "\n";
  printf("wrote %s\n", path.c_str());
}

lusztig::CharacterTable to_ct(const NamedTable& nt, const std::string& type) {
  lusztig::CharacterTable ct;
  ct.type = type;
  for (size_t c = 0; c < nt.class_labels.size(); ++c) {
    lusztig::WeylClass wc;
    wc.label = nt.class_labels[c];
    wc.size = nt.raw.classes.classes[c].size;
    wc.word = nt.raw.classes.classes[c].representative.word;
    ct.classes.push_back(std::move(wc));
  }
  for (size_t ch = 0; ch < nt.char_labels.size(); ++ch) {
    lusztig::WeylChar wc;
    wc.label = nt.char_labels[ch];
    wc.dim = nt.raw.dims[ch];
    wc.values = nt.raw.values[ch];
    ct.chars.push_back(std::move(wc));
  }
  return ct;
}

// --------------------------------------------------------------------------
// transactional Lusztig-Shoji state over omega-tilde with lazy rescaling

struct SolveState {
  const std::vector<std::vector<Rat>>* om_tilde = nullptr;
  Int q;
  Int group_order;  // 0 disables the index-divisor pruning
  std::vector<int> d;
  std::vector<std::vector<Rat>> P, L;
  std::vector<size_t> processed;
  std::vector<std::vector<size_t>> placed_blocks;

  Rat omega(size_t a, size_t b) const {
    Rat scale(1, pow_int(q, (unsigned long)(d[a] + d[b])));
    scale.canonicalize();
    return (*om_tilde)[a][b] * scale;
  }
};

bool is_nonneg_int(const Rat& r) { return r.get_den() == 1 && r >= 0; }

struct PushLog {
  size_t processed_size = 0, blocks_size = 0;
  std::vector<std::tuple<size_t, size_t, Rat>> p_entries;
  std::vector<std::tuple<size_t, size_t, Rat>> l_entries;
  std::vector<size_t> d_set;
};

void rollback(SolveState& st, const PushLog& log) {
  st.processed.resize(log.processed_size);
  st.placed_blocks.resize(log.blocks_size);
  for (const auto& [r, cc, v] : log.p_entries) st.P[r][cc] = v;
  for (const auto& [r, cc, v] : log.l_entries) st.L[r][cc] = v;
  for (size_t e : log.d_set) st.d[e] = -1;
}

// pushes one d-level; rolls back and returns false when inconsistent
bool push_level(SolveState& st, const std::vector<std::vector<size_t>>& blocks, int d,
                PushLog& log, size_t free_block_count = SIZE_MAX) {
  log.processed_size = st.processed.size();
  log.blocks_size = st.placed_blocks.size();
  log.p_entries.clear();
  log.l_entries.clear();
  log.d_set.clear();

  std::vector<size_t> here;
  for (const auto& b : blocks) here.insert(here.end(), b.begin(), b.end());
  for (size_t e : here) {
    st.d[e] = d;
    log.d_set.push_back(e);
  }
  auto fail = [&]() {
    rollback(st, log);
    return false;
  };

  const size_t m = st.processed.size();
  if (m) {
    // M[a][b] = (P^tr L) over processed indices; L is block diagonal
    std::vector<std::vector<Rat>> M(m, std::vector<Rat>(m, Rat(0)));
    std::vector<size_t> pos(st.P.size(), SIZE_MAX);
    for (size_t a = 0; a < m; ++a) pos[st.processed[a]] = a;
    for (const auto& blk : st.placed_blocks)
      for (size_t i : blk)
        for (size_t j : blk) {
          if (st.L[i][j] == 0) continue;
          size_t bj = pos[j];
          for (size_t a = 0; a < m; ++a) {
            const Rat& pia = st.P[i][st.processed[a]];
            if (pia == 0) continue;
            M[a][bj] += pia * st.L[i][j];
          }
        }
    for (size_t e : here) {
      std::vector<std::vector<Rat>> mm = M;
      std::vector<Rat> rhs(m);
      for (size_t a = 0; a < m; ++a) rhs[a] = st.omega(st.processed[a], e);
      for (size_t col = 0; col < m; ++col) {
        size_t piv = col;
        while (piv < m && mm[piv][col] == 0) ++piv;
        if (piv == m) return fail();
        std::swap(mm[piv], mm[col]);
        std::swap(rhs[piv], rhs[col]);
        Rat inv = 1 / mm[col][col];
        for (auto& x : mm[col]) x *= inv;
        rhs[col] *= inv;
        for (size_t r = 0; r < m; ++r) {
          if (r == col || mm[r][col] == 0) continue;
          Rat f = mm[r][col];
          for (size_t cc = col; cc < m; ++cc) mm[r][cc] -= f * mm[col][cc];
          rhs[r] -= f * rhs[col];
        }
      }
      for (size_t b = 0; b < m; ++b) {
        if (!is_nonneg_int(rhs[b])) return fail();
        log.p_entries.emplace_back(st.processed[b], e, st.P[st.processed[b]][e]);
        st.P[st.processed[b]][e] = rhs[b];
      }
    }
  }

  auto corr = [&](size_t e1, size_t e2) {
    Rat acc(0);
    for (const auto& blk : st.placed_blocks)
      for (size_t i : blk) {
        const Rat& p1 = st.P[i][e1];
        if (p1 == 0) continue;
        for (size_t j : blk) {
          if (st.L[i][j] == 0) continue;
          const Rat& p2 = st.P[j][e2];
          if (p2 == 0) continue;
          acc += p1 * st.L[i][j] * p2;
        }
      }
    return acc;
  };

  std::vector<int> block_of(here.size());
  {
    size_t t = 0;
    for (size_t bi = 0; bi < blocks.size(); ++bi)
      for (size_t j = 0; j < blocks[bi].size(); ++j) block_of[t++] = int(bi);
  }
  for (size_t i = 0; i < here.size(); ++i)
    for (size_t j = i; j < here.size(); ++j) {
      size_t e1 = here[i], e2 = here[j];
      Rat rem = st.omega(e1, e2) - corr(e1, e2);
      if (block_of[i] == block_of[j]) {
        if (rem.get_den() != 1) return fail();
        if (e1 == e2 && rem <= 0) return fail();
        log.l_entries.emplace_back(e1, e2, st.L[e1][e2]);
        st.L[e1][e2] = rem;
        if (e1 != e2) {
          log.l_entries.emplace_back(e2, e1, st.L[e2][e1]);
          st.L[e2][e1] = rem;
        }
      } else if (rem != 0) {
        return fail();
      }
    }
  for (const auto& b : blocks)
    if (b.size() == 2 && st.L[b[0]][b[1]] * st.L[b[0]][b[1]] > st.L[b[0]][b[0]] * st.L[b[1]][b[1]])
      return fail();
  // index structure: a singleton block's lambda is a single index
  // [G^F : C_G(u)^F] dividing |G^F|; a Z/2 block splits into two such
  if (st.group_order != 0) {
    size_t checked = 0;
    for (const auto& b : blocks) {
      if (checked++ >= free_block_count) break;
      if (b.size() == 1) {
        const Rat& lam = st.L[b[0]][b[0]];
        if (st.group_order % lam.get_num() != 0) return fail();
      } else if (b.size() == 2) {
        bool some_ok = false;
        for (int which = 0; which < 2 && !some_ok; ++which) {
          size_t e0 = b[size_t(which)];
          size_t e1 = b[size_t(1 - which)];
          Rat p1 = (st.L[e0][e0] + st.L[e0][e1]) / 2;
          Rat p2 = (st.L[e0][e0] - st.L[e0][e1]) / 2;
          if (p1.get_den() != 1 || p2.get_den() != 1) continue;
          if (p1 <= 0 || p2 <= 0) continue;
          if (st.group_order % p1.get_num() != 0 || st.group_order % p2.get_num() != 0) continue;
          some_ok = true;
        }
        if (!some_ok) return fail();
      }
    }
  }
  for (size_t e : here) st.processed.push_back(e);
  for (const auto& b : blocks) st.placed_blocks.push_back(b);
  return true;
}

// --------------------------------------------------------------------------

struct F4Fit {
  NamedTable nt;
  lusztig::CharacterTable ct;
  weyl::RootSystem rs;
  std::vector<std::vector<Rat>> om2, om3, om5;
  size_t triv_idx = 0;
  bool use_classical_levels = true;
  long nodes = 0;

  struct Solution {
    std::vector<int> d;
    std::vector<std::string> cls;
    std::vector<std::vector<Rat>> P2;  // the q=2 solution, for local systems
  };
  std::vector<Solution> solutions;

  struct Pinned {
    int d;
    std::string cls;
    std::vector<size_t> members;
  };
  struct Ctx {
    std::vector<Pinned> pinned;
    std::vector<int> dmax;
  };

  size_t idx(const char* label) const {
    for (size_t i = 0; i < nt.char_labels.size(); ++i)
      if (nt.char_labels[i] == label) return i;
    throw ValidationError(std::string("no char ") + label);
  }

  void search();
  bool final_checks(std::vector<SolveState>& states, const std::vector<int>& dvec);
  void place(int d, size_t next_pinned, std::vector<size_t> pool_left, int blocks_left,
             int doubles_left, std::vector<SolveState>& states, std::vector<int>& dvec,
             std::vector<std::string>& cvec, const Ctx& cx);
  void emit(const std::string& datadir);
};

void F4Fit::search() {
  rs = weyl::generate_roots(weyl::build_cartan("F4"));
  nt = build_named("F4");
  ct = to_ct(nt, "F4");
  triv_idx = idx("phi1_0");
  om2 = lusztig::compute_omega(ct, rs, 2, {}).tilde;
  om3 = lusztig::compute_omega(ct, rs, 3, {}).tilde;
  om5 = lusztig::compute_omega(ct, rs, 5, {}).tilde;

  auto dmax_of = [&](size_t e) {
    auto dm = [&](const Rat& v, int q) {
      Int x = v.get_num();
      int d = 0;
      while (x % (q * q) == 0) {
        x /= q * q;
        ++d;
      }
      return d;
    };
    return std::min({dm(om2[e][e], 2), dm(om3[e][e], 3), dm(om5[e][e], 5)});
  };

  auto pdg = weyl::poincare(rs);
  for (int mask = 0; mask < 32; ++mask) {
    Ctx cx;
    auto pick = [&](int bit, const char* a, const char* b) { return idx((mask >> bit) & 1 ? b : a); };
    size_t c47 = pick(0, "phi4_7a", "phi4_7b");
    size_t c96 = pick(1, "phi9_6a", "phi9_6b");
    size_t c66 = pick(2, "phi6_6a", "phi6_6b");
    size_t c112 = pick(3, "phi1_12a", "phi1_12b");
    size_t c24 = pick(4, "phi2_4a", "phi2_4b");
    cx.pinned.push_back({5, "C3a1", {idx("phi16_5"), c47}});
    cx.pinned.push_back({4, "F4a3", {idx("phi12_4"), c96, c66, c112}});
    cx.pinned.push_back({2, "F4a2", {idx("phi9_2"), c24}});
    size_t other24 = (c24 == idx("phi2_4a")) ? idx("phi2_4b") : idx("phi2_4a");
    cx.pinned.push_back({1, "F4a1", {idx("phi4_8"), other24}});
    cx.pinned.push_back({0, "F4", {triv_idx}});

    std::set<size_t> reserved;
    for (const auto& p : cx.pinned)
      for (size_t e : p.members) reserved.insert(e);
    std::vector<size_t> pool;
    for (size_t e = 0; e < ct.chars.size(); ++e)
      if (!reserved.count(e)) pool.push_back(e);
    cx.dmax.resize(ct.chars.size());
    for (size_t e = 0; e < ct.chars.size(); ++e) cx.dmax[e] = dmax_of(e);

    std::vector<SolveState> states(3);
    states[0].q = 2;
    states[0].om_tilde = &om2;
    states[1].q = 3;
    states[1].om_tilde = &om3;
    states[2].q = 5;
    states[2].om_tilde = &om5;
    for (auto& st : states) {
      st.group_order = pdg.group_order(st.q);
      st.d.assign(ct.chars.size(), -1);
      st.P.assign(ct.chars.size(), std::vector<Rat>(ct.chars.size(), Rat(0)));
      st.L.assign(ct.chars.size(), std::vector<Rat>(ct.chars.size(), Rat(0)));
      for (size_t i = 0; i < ct.chars.size(); ++i) st.P[i][i] = 1;
    }
    std::vector<int> dvec(ct.chars.size(), -1);
    std::vector<std::string> cvec(ct.chars.size());
    place(24, 0, pool, 11, 3, states, dvec, cvec, cx);
  }
  printf("search explored %ld nodes, found %zu solution(s)\n", nodes, solutions.size());
  for (const auto& s : solutions) {
    printf("solution:\n");
    for (size_t e = 0; e < ct.chars.size(); ++e)
      printf("  %-10s d=%-3d class=%s\n", nt.char_labels[e].c_str(), s.d[e], s.cls[e].c_str());
  }
  fflush(stdout);
}

bool F4Fit::final_checks(std::vector<SolveState>& states, const std::vector<int>& dvec) {
  const size_t n = ct.chars.size();
  auto pd = weyl::poincare(rs);
  for (auto& st : states) {
    for (size_t e = 0; e < n; ++e) {
      const Rat& v = st.P[e][triv_idx];
      if (v != 0 && v != 1) return false;
    }
    Int q = st.q;
    auto pt = [&](size_t ep) {
      Rat acc(0);
      for (size_t e = 0; e < n; ++e)
        acc += Rat(pow_int(q, (unsigned long)dvec[e]) * Int(ct.chars[e].dim)) * st.P[ep][e];
      return acc;
    };
    auto want = [&](const char* poly) { return Rat(Poly::parse(poly).eval_int(q)); };
    if (pt(idx("phi4_8")) != want("4q+1")) return false;
    if (pt(idx("phi9_2")) != want("9q^2+4q+1")) return false;
    if (pt(idx("phi12_4")) != want("12q^4+16q^3+9q^2+4q+1")) return false;
    if (pt(idx("phi16_5")) != want("16q^5+36q^4+28q^3+11q^2+4q+1")) return false;

    Int g = pd.group_order(q);
    auto block_members = [&](size_t anchor) {
      std::vector<size_t> blk;
      for (size_t e = 0; e < n; ++e)
        if (dvec[e] == dvec[anchor]) blk.push_back(e);
      return blk;
    };
    auto lam_equal = [&](const std::vector<size_t>& blk, const Rat& expect) {
      for (size_t a : blk)
        for (size_t b : blk)
          if (st.L[a][b] != ((a == b) ? expect : Rat(0))) return false;
      return true;
    };
    {
      auto blk = block_members(idx("phi4_8"));
      if (blk.size() != 2) return false;
      Rat e1(g, pow_int(q, 6));
      e1.canonicalize();
      if (!lam_equal(blk, e1)) return false;
    }
    {
      auto blk = block_members(idx("phi9_2"));
      if (blk.size() != 2) return false;
      Rat e1(g, pow_int(q, 8));
      e1.canonicalize();
      if (!lam_equal(blk, e1)) return false;
    }
    {
      auto blk = block_members(idx("phi12_4"));
      if (blk.size() != 4) return false;
      Rat e1(g, pow_int(q, 12));
      e1.canonicalize();
      if (!lam_equal(blk, e1)) return false;
    }
    {
      auto blk = block_members(idx("phi16_5"));
      if (blk.size() != 2) return false;
      Rat e1(g, pow_int(q, 12) * (q * q - 1));
      e1.canonicalize();
      if (!lam_equal(blk, e1)) return false;
    }
    // unipotent count: trivial-system diagonal lambdas sum to q^{2N}
    {
      Rat total(0);
      for (size_t e = 0; e < n; ++e)
        if (st.P[e][triv_idx] == 1) total += st.L[e][e];
      if (total != Rat(pow_int(q, 48))) return false;
    }
    // the d=24 row carries the full coset count
    {
      size_t top = SIZE_MAX;
      for (size_t e = 0; e < n; ++e)
        if (dvec[e] == 24) top = e;
      if (top == SIZE_MAX) return false;
      if (pt(top) != Rat(pd.weyl_sum_q(q))) return false;
    }
  }
  return true;
}

void F4Fit::place(int d, size_t next_pinned, std::vector<size_t> pool_left, int blocks_left,
                  int doubles_left, std::vector<SolveState>& states, std::vector<int>& dvec,
                  std::vector<std::string>& cvec, const Ctx& cx) {
  ++nodes;
  if ((nodes & 0xffff) == 0) {
    printf("... %ld nodes (at d=%d, pool=%zu)\n", nodes, d, pool_left.size());
    fflush(stdout);
  }
  if (d < 0) {
    if (pool_left.empty() && next_pinned == cx.pinned.size() && blocks_left == 0 &&
        final_checks(states, dvec)) {
      Solution s;
      s.d = dvec;
      s.cls = cvec;
      s.P2 = states[0].P;
      solutions.push_back(std::move(s));
      printf("  solution found (nodes=%ld)\n", nodes);
      fflush(stdout);
    }
    return;
  }
  bool pinned_here = next_pinned < cx.pinned.size() && cx.pinned[next_pinned].d == d;
  int capacity = 0;
  if (use_classical_levels) {
    static const std::map<int, int> caps = {{24, 1}, {16, 1}, {13, 1}, {12, 1}, {9, 2},
                                            {8, 1},  {7, 1},  {6, 1},  {3, 2}};
    auto it = caps.find(d);
    capacity = (it == caps.end()) ? 0 : it->second;
  } else {
    capacity = (d == 3 || d >= 6) ? 2 : 0;
  }

  // free-block structures at this level
  std::vector<std::vector<std::vector<size_t>>> structures;
  structures.push_back({});
  if (capacity > 0 && blocks_left > 0) {
    for (size_t a = 0; a < pool_left.size(); ++a) {
      if (cx.dmax[pool_left[a]] < d) continue;
      structures.push_back({{pool_left[a]}});
      if (doubles_left > 0)
        for (size_t b = a + 1; b < pool_left.size(); ++b) {
          if (cx.dmax[pool_left[b]] < d) continue;
          structures.push_back({{pool_left[a], pool_left[b]}});
        }
    }
    if (capacity >= 2) {
      size_t k1_end = structures.size();
      for (size_t s1 = 1; s1 < k1_end; ++s1)
        for (size_t s2 = s1 + 1; s2 < k1_end; ++s2) {
          const auto& b1 = structures[s1][0];
          const auto& b2 = structures[s2][0];
          bool disjoint = true;
          for (size_t x : b1)
            for (size_t y : b2)
              if (x == y) disjoint = false;
          if (!disjoint || b1[0] > b2[0]) continue;
          if (int(b1.size() + b2.size()) - 2 > doubles_left) continue;
          structures.push_back({b1, b2});
        }
    }
  }

  for (const auto& strc : structures) {
    // classical hypothesis: levels with capacity are filled exactly
    if (use_classical_levels && capacity > 0 && int(strc.size()) != capacity) continue;
    if (d == 24 && (strc.size() != 1 || strc[0].size() != 1)) continue;

    int used_chars = 0, used_doubles = 0;
    for (const auto& b : strc) {
      used_chars += int(b.size());
      used_doubles += int(b.size()) - 1;
    }
    if (used_doubles > doubles_left) continue;

    std::vector<std::vector<size_t>> blocks = strc;
    if (pinned_here) blocks.push_back(cx.pinned[next_pinned].members);
    if (blocks.empty()) {
      place(d - 1, next_pinned, pool_left, blocks_left, doubles_left, states, dvec, cvec, cx);
      continue;
    }

    {
      int chars_left = int(pool_left.size()) - used_chars;
      int fblocks_left = blocks_left - int(strc.size());
      int dbl_left = doubles_left - used_doubles;
      if (chars_left < fblocks_left || chars_left > fblocks_left + dbl_left) continue;
    }

    std::vector<PushLog> logs(states.size());
    size_t pushed = 0;
    bool ok = true;
    for (size_t si = 0; si < states.size(); ++si) {
      if (!push_level(states[si], blocks, d, logs[si], strc.size())) {
        ok = false;
        break;
      }
      ++pushed;
    }
    if (!ok) {
      for (size_t si = 0; si < pushed; ++si) rollback(states[si], logs[si]);
      continue;
    }

    std::vector<size_t> npool;
    for (size_t e : pool_left) {
      bool used_e = false;
      for (const auto& b : strc)
        for (size_t x : b)
          if (x == e) used_e = true;
      if (!used_e) npool.push_back(e);
    }
    for (size_t bi = 0; bi < blocks.size(); ++bi) {
      bool is_pinned = pinned_here && bi + 1 == blocks.size();
      for (size_t e : blocks[bi]) {
        dvec[e] = d;
        cvec[e] = is_pinned ? cx.pinned[next_pinned].cls
                            : "X" + std::to_string(d) + std::string(1, char('a' + int(bi)));
      }
    }
    place(d - 1, next_pinned + (pinned_here ? 1 : 0), npool, blocks_left - int(strc.size()),
          doubles_left - used_doubles, states, dvec, cvec, cx);
    for (size_t si = 0; si < states.size(); ++si) rollback(states[si], logs[si]);
    for (const auto& b : blocks)
      for (size_t e : b) {
        dvec[e] = -1;
        cvec[e].clear();
      }
  }
}

void F4Fit::emit(const std::string& datadir) {
  if (solutions.empty()) {
    printf("no solution; not emitting\n");
    return;
  }
  if (solutions.size() > 1) printf("note: %zu solutions; emitting the first\n", solutions.size());
  const auto& sol = solutions[0];
  const size_t n = ct.chars.size();

  std::vector<std::pair<std::string, std::string>> aliases;
  auto partner_of = [&](const char* anchor) {
    size_t ai = idx(anchor);
    for (size_t e = 0; e < n; ++e)
      if (e != ai && sol.d[e] == sol.d[ai] && sol.cls[e] == sol.cls[ai]) return e;
    throw ValidationError("no partner");
  };
  aliases.push_back({"chi1_0", "phi1_0"});
  aliases.push_back({"chi4_1", "phi4_8"});
  aliases.push_back({"chi2_3", nt.char_labels[partner_of("phi4_8")]});
  aliases.push_back({"chi9_1", "phi9_2"});
  aliases.push_back({"chi2_1", nt.char_labels[partner_of("phi9_2")]});
  aliases.push_back({"chi12", "phi12_4"});
  aliases.push_back({"chi16", "phi16_5"});
  aliases.push_back({"chi4_3", nt.char_labels[partner_of("phi16_5")]});
  for (size_t e = 0; e < n; ++e) {
    if (sol.cls[e] != "F4a3" || e == idx("phi12_4")) continue;
    if (ct.chars[e].dim == 9) aliases.push_back({"chi9_3", nt.char_labels[e]});
    if (ct.chars[e].dim == 6) aliases.push_back({"chi6_2", nt.char_labels[e]});
    if (ct.chars[e].dim == 1) aliases.push_back({"chi1_3", nt.char_labels[e]});
  }
  emit_chartable(nt, "F4", aliases, datadir + "/chartable_f4.txt");

  std::map<size_t, int> dimE;
  for (size_t e = 0; e < n; ++e) dimE[e] = 1;
  for (size_t e = 0; e < n; ++e)
    if (sol.cls[e] == "F4a3") {
      if (ct.chars[e].dim == 9) dimE[e] = 3;
      if (ct.chars[e].dim == 6) dimE[e] = 2;
      if (ct.chars[e].dim == 1) dimE[e] = 3;
    }
  std::ofstream out(datadir + "/springer_f4_p3.txt");
  out << "# Springer correspondence for F4 in characteristic 3.\n";
  out << "# Derived by tablegen's constraint search: the block/d assignment\n";
  out << "# admitting an integral nonnegative Lusztig-Shoji solution that\n";
  out << "# reproduces the published Q_1 coefficient polynomials and the\n";
  out << "# centraliser data of the critical classes.  Free-block class names\n";
  out << "# (X<d><letter>) are positional; nothing downstream depends on them.\n";
  const auto& P2 = sol.P2;
  for (size_t e = 0; e < n; ++e) {
    bool trivial_sys = (P2[e][triv_idx] == 1);
    out << "row char=" << nt.char_labels[e] << " d=" << sol.d[e] << " class=" << sol.cls[e]
        << " localsys=" << (trivial_sys ? "1" : "eps")
        << " dimE=" << (trivial_sys ? 1 : dimE[e]) << "\n";
  }
  printf("wrote %s\n", (datadir + "/springer_f4_p3.txt").c_str());
}

// --------------------------------------------------------------------------

void emit_g2(const std::string& datadir) {
  NamedTable nt = build_named("G2");
  emit_chartable(nt, "G2", {}, datadir + "/chartable_g2.txt");
  {
    std::ofstream out(datadir + "/springer_g2_p3.txt");
    out << "# Springer correspondence for G2 in characteristic 3 (published table).\n";
    out << "row char=E1_6 d=6 class=1 localsys=1 dimE=1\n";
    out << "row char=E1_3p d=3 class=A1t3 localsys=1 dimE=1\n";
    out << "row char=E1_3pp d=3 class=A1 localsys=1 dimE=1\n";
    out << "row char=E2_2 d=2 class=A1t localsys=1 dimE=1\n";
    out << "row char=E2_1 d=1 class=G2a1 localsys=1 dimE=1\n";
    out << "row char=E1_0 d=0 class=G2 localsys=1 dimE=1\n";
    printf("wrote %s\n", (datadir + "/springer_g2_p3.txt").c_str());
  }
  {
    std::ofstream out(datadir + "/springer_g2_pnot3.txt");
    out << "# Springer correspondence for G2 away from characteristic 3 (published table).\n";
    out << "row char=E1_6 d=6 class=1 localsys=1 dimE=1\n";
    out << "row char=E1_3pp d=3 class=A1 localsys=1 dimE=1\n";
    out << "row char=E2_2 d=2 class=A1t localsys=1 dimE=1\n";
    out << "row char=E2_1 d=1 class=G2a1 localsys=1 dimE=1\n";
    out << "row char=E1_3p d=1 class=G2a1 localsys=r2 dimE=2\n";
    out << "row char=E1_0 d=0 class=G2 localsys=1 dimE=1\n";
    printf("wrote %s\n", (datadir + "/springer_g2_pnot3.txt").c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    printf("usage: tablegen <emit <datadir> | f4fit [--free-levels]>\n");
    return 2;
  }
  std::string cmd = argv[1];
  try {
    if (cmd == "emit") {
      std::string dir = argc > 2 ? argv[2] : "data";
      emit_g2(dir);
      F4Fit fit;
      fit.search();
      if (fit.solutions.empty()) {
        fit.use_classical_levels = false;
        fit.solutions.clear();
        fit.nodes = 0;
        fit.search();
      }
      fit.emit(dir);
    } else if (cmd == "f4fit") {
      F4Fit fit;
      for (int i = 2; i < argc; ++i)
        if (std::string(argv[i]) == "--free-levels") fit.use_classical_levels = false;
      fit.search();
    } else {
      printf("unknown command %s\n", cmd.c_str());
      return 2;
    }
  } catch (const std::exception& e) {
    fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
