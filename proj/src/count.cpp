#include "greenfn/count.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace green::count {

using chevgroup::Context;
using chevgroup::FrobeniusSpec;
using gfp::PackedMatrix;
using weyl::RootIndex;
using weyl::WeylElement;

Engine Engine::make(const std::string& type, int q, bool twisted) {
  Engine e;
  e.q = q;
  int p = 0, k = 0;
  for (int cand : {2, 3, 5, 7}) {
    if (q == cand) { p = cand; k = 1; }
    if (q == cand * cand) { p = cand; k = 2; }
  }
  if (!p) throw ValidationError("unsupported q=" + std::to_string(q));
  if (twisted) k = 2;  // matrices live over GF(q^2)
  e.ctx = &Context::get(type, p, k);
  e.frobenius = FrobeniusSpec{q, twisted};
  return e;
}

std::vector<RootIndex> auto_filter(const Context& ctx, const chevgroup::WordSpec& u) {
  std::vector<RootIndex> out;
  for (const auto& f : u.factors) {
    if (f.kind != 'x') break;
    RootIndex r = ctx.root_from_coords(f.coords);
    if (ctx.roots().height[size_t(r)] != 1) break;
    out.push_back(r);
  }
  return out;
}

namespace {

// Per-cell digit: the parameter values with conjugated factor matrices.
struct Digit {
  std::vector<PackedMatrix> left;   // conj(g(t))^-1
  std::vector<PackedMatrix> right;  // conj(g(t))
  size_t values = 0;
};

struct CellSetup {
  std::vector<Digit> digits;
  PackedMatrix base;  // conj(u) = wdot^-1 u wdot
  uint64_t total = 1;
};

CellSetup prepare_cell(const Engine& eng, const PackedMatrix& u, const WeylElement& w) {
  const Context& ctx = *eng.ctx;
  const auto& F = ctx.field();
  const auto& rs = ctx.roots();

  // cosets of the cell keyed by w are v wdot^-1 B with v running over the
  // Phi_w^+ product; the membership test conjugates by wdot^-1 on the right
  PackedMatrix W = eng.frobenius.twisted ? ctx.wdot_twisted(w, eng.frobenius) : ctx.wdot(w);
  PackedMatrix Winv = W.inverse();
  auto conj = [&](const PackedMatrix& m) { return W * m * Winv; };

  CellSetup setup;
  setup.base = conj(u);
  auto inv = weyl::inversion_set(rs, w);

  if (!eng.frobenius.twisted) {
    // subfield of size q inside the working field
    std::vector<uint8_t> subfield;
    for (int t = 0; t < F.size(); ++t) subfield.push_back(uint8_t(t));
    if (int(subfield.size()) != eng.q) throw ValidationError("field does not match q");
    for (RootIndex b : inv) {
      Digit d;
      for (uint8_t t : subfield) {
        d.right.push_back(conj(ctx.root_element(b, t)));
        d.left.push_back(conj(ctx.root_element(b, F.neg(t))));
      }
      d.values = d.right.size();
      if (setup.total > (uint64_t(1) << 62) / d.values)
        throw ValidationError("cell too large for the odometer index space");
      setup.total *= d.values;
      setup.digits.push_back(std::move(d));
    }
    return setup;
  }

  // twisted: digits are gamma-orbits on the inversion set
  const auto& tau = ctx.tau_roots();
  std::vector<uint8_t> fq;  // fixed field of x -> x^q
  for (int t = 0; t < F.size(); ++t)
    if (F.pow(uint8_t(t), (unsigned long)eng.q) == uint8_t(t)) fq.push_back(uint8_t(t));
  if (int(fq.size()) != eng.q) throw ValidationError("twisted subfield has wrong size");

  std::vector<bool> seen(inv.size(), false);
  for (size_t i = 0; i < inv.size(); ++i) {
    if (seen[i]) continue;
    RootIndex b = inv[i];
    RootIndex bd = tau[size_t(b)];
    seen[i] = true;
    Digit d;
    if (bd == b) {
      for (uint8_t t : fq) {
        d.right.push_back(conj(ctx.root_element(b, t)));
        d.left.push_back(conj(ctx.root_element(b, F.neg(t))));
      }
    } else {
      auto it = std::find(inv.begin(), inv.end(), bd);
      if (it == inv.end())
        throw ValidationError("inversion set is not gamma-stable");
      seen[size_t(it - inv.begin())] = true;
      for (int t = 0; t < F.size(); ++t) {
        uint8_t tq = F.pow(uint8_t(t), (unsigned long)eng.q);
        PackedMatrix g = ctx.root_element(b, uint8_t(t)) * ctx.root_element(bd, tq);
        PackedMatrix gi = ctx.root_element(bd, F.neg(tq)) * ctx.root_element(b, F.neg(uint8_t(t)));
        d.right.push_back(conj(g));
        d.left.push_back(conj(gi));
      }
    }
    d.values = d.right.size();
    if (setup.total > (uint64_t(1) << 62) / d.values)
      throw ValidationError("cell too large for the odometer index space");
    setup.total *= d.values;
    setup.digits.push_back(std::move(d));
  }
  return setup;
}

uint64_t scan_range(const CellSetup& setup, uint64_t from, uint64_t to) {
  const size_t l = setup.digits.size();
  if (l == 0) return (from == 0 && to >= 1 && setup.base.is_upper_triangular()) ? 1 : 0;

  std::vector<size_t> digit(l, 0);
  std::vector<PackedMatrix> stack(l + 1);
  stack[0] = setup.base;

  // decompose `from` in mixed radix, most significant digit first
  uint64_t rem = from;
  for (size_t j = l; j-- > 0;) {
    digit[j] = size_t(rem % setup.digits[j].values);
    rem /= setup.digits[j].values;
  }
  auto recompute_from = [&](size_t j) {
    for (size_t k = j; k < l; ++k)
      stack[k + 1] = setup.digits[k].left[digit[k]] * stack[k] * setup.digits[k].right[digit[k]];
  };
  recompute_from(0);

  uint64_t fixed = 0;
  for (uint64_t idx = from; idx < to; ++idx) {
    if (stack[l].is_upper_triangular()) ++fixed;
    if (idx + 1 == to) break;
    // odometer increment, last digit fastest
    size_t j = l;
    while (j-- > 0) {
      if (++digit[j] < setup.digits[j].values) break;
      digit[j] = 0;
      if (j == 0) return fixed;  // wrapped past the end
    }
    recompute_from(j);
  }
  return fixed;
}

constexpr uint64_t kChunk = 4096;

}  // namespace

CellResult count_cell(const Engine& eng, const PackedMatrix& u, const WeylElement& w,
                      uint64_t from, uint64_t to) {
  if (eng.frobenius.twisted) {
    // gamma(w) must equal w
    const auto& tau = eng.ctx->tau_roots();
    for (int r = 0; r < eng.ctx->roots().root_count(); ++r)
      if (tau[size_t(w.perm[size_t(tau[size_t(r)])])] != w.perm[size_t(r)])
        throw ValidationError("cell is not gamma-fixed");
  }
  CellSetup setup = prepare_cell(eng, u, w);
  if (to == 0) to = setup.total;
  CellResult res;
  res.word = w.word;
  res.size = Int((unsigned long)setup.total);
  res.fixed = scan_range(setup, from, to);
  res.scanned = to - from;
  res.done = (from == 0 && to == setup.total);
  return res;
}

std::string cell_key(const std::vector<int>& word) {
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(word[i] + 1);
  }
  return s.empty() ? "-" : s;
}

std::string job_fingerprint(const CountJob& job) {
  std::string filter_txt = "none";
  if (job.filter.kind == FilterSpec::Kind::Auto) filter_txt = "auto";
  if (job.filter.kind == FilterSpec::Kind::Explicit) {
    filter_txt = "roots:";
    for (auto r : job.filter.roots) filter_txt += std::to_string(r) + ";";
  }
  std::string blob = "type=" + job.type + " q=" + std::to_string(job.q) +
                     " twist=" + std::to_string(job.twisted ? 1 : 0) + " u=" + job.u_word +
                     " maxlen=" + std::to_string(job.maxlen) + " filter=" + filter_txt +
                     " basis-order=1";
  return sha256_hex(blob).substr(0, 16);
}

CheckpointData load_checkpoint(const std::string& path) {
  CheckpointData data;
  std::ifstream in(path);
  if (!in) return data;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string tok;
    ss >> tok;
    if (tok == "job") {
      std::string fp;
      ss >> fp;
      data.fingerprint = fp;
      continue;
    }
    if (tok.rfind("w=", 0) != 0) continue;
    CellResult r;
    std::string wtxt = tok.substr(2);
    if (wtxt != "-") {
      std::istringstream ws(wtxt);
      std::string part;
      while (std::getline(ws, part, ',')) r.word.push_back(std::stoi(part) - 1);
    }
    std::string sizetok, fixedtok, statustok;
    ss >> sizetok >> fixedtok >> statustok;
    r.size = Int(sizetok.substr(5));
    r.fixed = std::stoull(fixedtok.substr(6));
    if (statustok == "status=done") {
      r.done = true;
      r.scanned = mpz_get_ui(r.size.get_mpz_t());
    } else {
      r.done = false;
      r.scanned = std::stoull(statustok.substr(15));  // status=partial:K
    }
    data.cells[cell_key(r.word)] = std::move(r);
  }
  return data;
}

namespace {

void append_checkpoint_line(std::ofstream& out, const CellResult& r) {
  out << "w=" << cell_key(r.word) << " size=" << r.size.get_str() << " fixed=" << r.fixed
      << " status=" << (r.done ? std::string("done") : "partial:" + std::to_string(r.scanned))
      << "\n";
  out.flush();
}

}  // namespace

std::vector<std::pair<std::vector<int>, Int>> dry_run_cells(const CountJob& job) {
  Engine eng = Engine::make(job.type, job.q, job.twisted);
  const Context& ctx = *eng.ctx;
  auto u = chevgroup::parse_word(job.u_word);

  weyl::EnumerationOptions opts;
  if (job.filter.kind == FilterSpec::Kind::Auto) opts.keep_positive = auto_filter(ctx, u);
  if (job.filter.kind == FilterSpec::Kind::Explicit) opts.keep_positive = job.filter.roots;
  auto cells = weyl::enumerate_by_length(ctx.roots(), job.maxlen, opts);

  std::vector<std::pair<std::vector<int>, Int>> out;
  for (const auto& w : cells) {
    if (job.twisted) {
      const auto& tau = ctx.tau_roots();
      bool fixed = true;
      for (int r = 0; r < ctx.roots().root_count() && fixed; ++r)
        if (tau[size_t(w.perm[size_t(tau[size_t(r)])])] != w.perm[size_t(r)]) fixed = false;
      if (!fixed) continue;
    }
    out.emplace_back(w.word, pow_int(job.q, (unsigned long)w.length));
  }
  return out;
}

CountReport count_upto(const CountJob& job, const std::function<void(size_t, size_t)>& progress) {
  Engine eng = Engine::make(job.type, job.q, job.twisted);
  const Context& ctx = *eng.ctx;
  auto uspec = chevgroup::parse_word(job.u_word);
  PackedMatrix u = ctx.evaluate_word(uspec);

  // job invariant: u unipotent and F-fixed
  u.jordan_type();  // throws NonUnipotent otherwise
  if (!ctx.is_frobenius_fixed(u, eng.frobenius))
    throw ValidationError("u is not fixed by the chosen Frobenius");

  weyl::EnumerationOptions opts;
  if (job.filter.kind == FilterSpec::Kind::Auto) opts.keep_positive = auto_filter(ctx, uspec);
  if (job.filter.kind == FilterSpec::Kind::Explicit) opts.keep_positive = job.filter.roots;
  auto elements = weyl::enumerate_by_length(ctx.roots(), job.maxlen, opts);

  std::vector<const WeylElement*> cells;
  for (const auto& w : elements) {
    if (job.twisted) {
      const auto& tau = ctx.tau_roots();
      bool fixed = true;
      for (int r = 0; r < ctx.roots().root_count() && fixed; ++r)
        if (tau[size_t(w.perm[size_t(tau[size_t(r)])])] != w.perm[size_t(r)]) fixed = false;
      if (!fixed) continue;
    }
    cells.push_back(&w);
  }

  // checkpoint resume
  CheckpointData ckpt;
  std::ofstream ckpt_out;
  std::string fp = job_fingerprint(job);
  if (!job.checkpoint_path.empty()) {
    ckpt = load_checkpoint(job.checkpoint_path);
    if (!ckpt.fingerprint.empty() && ckpt.fingerprint != fp)
      throw ValidationError("checkpoint fingerprint mismatch: file has " + ckpt.fingerprint +
                            ", job is " + fp);
    bool fresh = ckpt.fingerprint.empty();
    ckpt_out.open(job.checkpoint_path, std::ios::app);
    if (fresh) {
      std::string filter_txt = "none";
      if (job.filter.kind == FilterSpec::Kind::Auto) filter_txt = "auto";
      if (job.filter.kind == FilterSpec::Kind::Explicit) filter_txt = "explicit";
      ckpt_out << "job " << fp << " type=" << job.type << " q=" << job.q
               << " twist=" << (job.twisted ? 1 : 0) << " maxlen=" << job.maxlen
               << " filter=" << filter_txt << "\n";
    } else {
      ckpt_out << "# resumed\n";
    }
    ckpt_out.flush();
  }

  CountReport report;
  report.complete = true;
  uint64_t chunks_used = 0;
  bool budget_hit = false;

  for (size_t ci = 0; ci < cells.size(); ++ci) {
    const WeylElement& w = *cells[ci];
    if (progress) progress(ci, cells.size());
    CellResult res;
    res.word = w.word;

    auto key = cell_key(w.word);
    auto prev = ckpt.cells.find(key);
    if (prev != ckpt.cells.end() && prev->second.done) {
      res = prev->second;
      report.cells.push_back(res);
      report.per_length_fixed[w.length] += Int((unsigned long)res.fixed);
      report.total_fixed += Int((unsigned long)res.fixed);
      continue;
    }

    if (budget_hit) {
      report.complete = false;
      break;
    }

    CellSetup setup = prepare_cell(eng, u, w);
    res.size = Int((unsigned long)setup.total);
    uint64_t start = 0;
    uint64_t base_fixed = 0;
    if (prev != ckpt.cells.end() && !prev->second.done) {
      start = prev->second.scanned;
      base_fixed = prev->second.fixed;
    }

    uint64_t remaining = setup.total - start;
    uint64_t nchunks = (remaining + kChunk - 1) / kChunk;
    uint64_t allowed = nchunks;
    if (job.chunk_budget) {
      uint64_t left = job.chunk_budget > chunks_used ? job.chunk_budget - chunks_used : 0;
      if (left < nchunks) {
        allowed = left;
        budget_hit = true;
      }
    }
    chunks_used += allowed;

    std::vector<uint64_t> chunk_fixed(size_t(allowed), 0);
    std::atomic<uint64_t> next{0};
    int nthreads = std::max(1, job.threads);
    auto worker = [&]() {
      for (;;) {
        uint64_t c = next.fetch_add(1);
        if (c >= allowed) return;
        uint64_t lo = start + c * kChunk;
        uint64_t hi = std::min<uint64_t>(lo + kChunk, setup.total);
        chunk_fixed[size_t(c)] = scan_range(setup, lo, hi);
      }
    };
    if (nthreads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }

    uint64_t fixed = base_fixed;
    for (uint64_t c : chunk_fixed) fixed += c;
    res.fixed = fixed;
    res.scanned = std::min<uint64_t>(start + allowed * kChunk, setup.total);
    res.done = (res.scanned == setup.total);
    if (!res.done) report.complete = false;

    if (ckpt_out.is_open()) append_checkpoint_line(ckpt_out, res);
    report.cells.push_back(res);
    report.per_length_fixed[w.length] += Int((unsigned long)res.fixed);
    report.total_fixed += Int((unsigned long)res.fixed);
    if (budget_hit && !res.done) break;
  }

  // exactness: complete, unfiltered, and maxlen covers the longest element
  if (report.complete && job.filter.kind == FilterSpec::Kind::None && !job.twisted) {
    int longest = ctx.roots().positive_count;
    report.covers_whole_group = (job.maxlen < 0 || job.maxlen >= longest);
  }
  return report;
}

Int full_coset_count(const Engine& eng, const PackedMatrix& u, uint64_t coset_cap) {
  const Context& ctx = *eng.ctx;
  if (eng.frobenius.twisted) throw ValidationError("full enumeration is split-only");
  auto pd = weyl::poincare(ctx.roots());
  if (pd.weyl_sum_q(eng.q) > Int((unsigned long)coset_cap))
    throw ValidationError("coset count exceeds the exhaustive-enumeration cap");
  auto all = weyl::enumerate_by_length(ctx.roots(), -1);
  Int total = 0;
  for (const auto& w : all) total += Int((unsigned long)count_cell(eng, u, w).fixed);
  return total;
}

GroupCensus tiny_group_oracle(const std::string& type, int q, uint64_t order_cap) {
  Engine eng = Engine::make(type, q, false);
  const Context& ctx = *eng.ctx;
  const auto& rs = ctx.roots();
  const auto& F = ctx.field();
  auto pd = weyl::poincare(rs);
  Int expected = pd.group_order(q);
  if (expected > Int((unsigned long)order_cap))
    throw ValidationError("group order exceeds the census cap");

  struct Entry {
    uint32_t id;
    std::string word;
  };
  std::unordered_map<std::string, Entry> elements;  // packed bytes -> id, word
  std::vector<PackedMatrix> mats;

  auto note = [&](const PackedMatrix& m, const std::string& word) {
    auto key = m.packed_bytes();
    auto it = elements.find(key);
    if (it == elements.end()) {
      Entry e{uint32_t(mats.size()), word};
      it = elements.emplace(std::move(key), std::move(e)).first;
      mats.push_back(m);
    }
    return it->second.id;
  };

  // enumerate B = U T: all unipotent tuples over the positive roots, then torus
  std::vector<std::pair<PackedMatrix, std::string>> borel;
  {
    std::vector<std::pair<PackedMatrix, std::string>> us{{PackedMatrix::identity(F, ctx.dim()), ""}};
    for (int r = 0; r < rs.positive_count; ++r) {
      std::vector<std::pair<PackedMatrix, std::string>> next;
      for (const auto& [m, wtext] : us)
        for (int t = 0; t < q; ++t) {
          if (t == 0) {
            next.emplace_back(m, wtext);
          } else {
            std::string coords;
            for (int c = 0; c < rs.rank; ++c)
              coords += (c ? "," : "") + std::to_string(rs.roots[size_t(r)][size_t(c)]);
            std::string fact = "x[" + coords + "](" + std::to_string(t) + ")";
            next.emplace_back(m * ctx.root_element(r, uint8_t(t)),
                              wtext.empty() ? fact : wtext + "*" + fact);
          }
        }
      us = std::move(next);
    }
    std::vector<std::pair<PackedMatrix, std::string>> torus{{PackedMatrix::identity(F, ctx.dim()), ""}};
    for (int i = 0; i < rs.rank; ++i) {
      std::vector<std::pair<PackedMatrix, std::string>> next;
      for (const auto& [m, wtext] : torus)
        for (int t = 1; t < q; ++t) {
          if (t == 1) {
            next.emplace_back(m, wtext);
          } else {
            std::string coords;
            for (int c = 0; c < rs.rank; ++c)
              coords += (c ? "," : "") +
                        std::to_string(rs.roots[size_t(rs.simple_root(i))][size_t(c)]);
            std::string fact = "h[" + coords + "](" + std::to_string(t) + ")";
            next.emplace_back(m * ctx.torus_element(rs.simple_root(i), uint8_t(t)),
                              wtext.empty() ? fact : wtext + "*" + fact);
          }
        }
      torus = std::move(next);
    }
    for (const auto& [um, uw] : us)
      for (const auto& [tm, tw] : torus) {
        std::string wtext = uw;
        if (!tw.empty()) wtext = wtext.empty() ? tw : wtext + "*" + tw;
        borel.emplace_back(um * tm, wtext);
      }
  }

  auto all_w = weyl::enumerate_by_length(rs, -1);
  for (const auto& w : all_w) {
    PackedMatrix wd = ctx.wdot(w);
    std::string wtext;
    for (int i : w.word) {
      std::string coords;
      for (int c = 0; c < rs.rank; ++c)
        coords += (c ? "," : "") + std::to_string(rs.roots[size_t(rs.simple_root(i))][size_t(c)]);
      std::string fact = "n[" + coords + "](1)";
      wtext = wtext.empty() ? fact : wtext + "*" + fact;
    }
    auto inv = weyl::inversion_set(rs, w);
    // U_w tuples
    std::vector<std::pair<PackedMatrix, std::string>> uw{{PackedMatrix::identity(F, ctx.dim()), ""}};
    for (RootIndex b : inv) {
      std::vector<std::pair<PackedMatrix, std::string>> next;
      for (const auto& [m, mtext] : uw)
        for (int t = 0; t < q; ++t) {
          if (t == 0) {
            next.emplace_back(m, mtext);
          } else {
            std::string coords;
            for (int c = 0; c < rs.rank; ++c)
              coords += (c ? "," : "") + std::to_string(rs.roots[size_t(b)][size_t(c)]);
            std::string fact = "x[" + coords + "](" + std::to_string(t) + ")";
            next.emplace_back(m * ctx.root_element(b, uint8_t(t)),
                              mtext.empty() ? fact : mtext + "*" + fact);
          }
        }
      uw = std::move(next);
    }
    for (const auto& [vm, vtext] : uw) {
      PackedMatrix vw = vm * wd;
      std::string vwtext = vtext.empty() ? wtext : (wtext.empty() ? vtext : vtext + "*" + wtext);
      for (const auto& [bm, btext] : borel) {
        std::string g = vwtext;
        if (!btext.empty()) g = g.empty() ? btext : g + "*" + btext;
        note(vw * bm, g);
      }
    }
  }

  if (Int((unsigned long)mats.size()) != expected)
    throw ValidationError("census found " + std::to_string(mats.size()) + " elements, expected " +
                          expected.get_str());

  // unipotent subset
  std::vector<uint32_t> unip;
  std::vector<char> is_unip(mats.size(), 0);
  for (uint32_t i = 0; i < mats.size(); ++i) {
    PackedMatrix nil = mats[i] - PackedMatrix::identity(F, ctx.dim());
    PackedMatrix pw = nil;
    unsigned long e = 1;
    while (e < (unsigned long)ctx.dim()) {
      pw = pw * pw;
      e *= 2;
    }
    bool zero = true;
    for (int r = 0; r < ctx.dim() && zero; ++r)
      for (int c = 0; c < ctx.dim() && zero; ++c)
        if (pw.get(r, c)) zero = false;
    if (zero) {
      is_unip[i] = 1;
      unip.push_back(i);
    }
  }

  // conjugation generators: x_{+-alpha_i}(t)
  std::vector<PackedMatrix> gens, gens_inv;
  for (int i = 0; i < rs.rank; ++i)
    for (int sgn = 0; sgn < 2; ++sgn)
      for (int t = 1; t < q; ++t) {
        RootIndex r = sgn ? rs.negative_of(rs.simple_root(i)) : rs.simple_root(i);
        gens.push_back(ctx.root_element(r, uint8_t(t)));
        gens_inv.push_back(ctx.root_element(r, F.neg(uint8_t(t))));
      }

  std::vector<uint32_t> class_of(mats.size(), UINT32_MAX);
  GroupCensus out;
  out.group_order = expected;
  out.unipotent_count = Int((unsigned long)unip.size());
  for (uint32_t start : unip) {
    if (class_of[start] != UINT32_MAX) continue;
    uint32_t cls = uint32_t(out.classes.size());
    std::vector<uint32_t> queue{start};
    class_of[start] = cls;
    for (size_t head = 0; head < queue.size(); ++head) {
      const PackedMatrix& m = mats[queue[head]];
      for (size_t g = 0; g < gens.size(); ++g) {
        PackedMatrix c = gens[g] * m * gens_inv[g];
        auto it = elements.find(c.packed_bytes());
        if (it == elements.end()) throw ValidationError("conjugate left the group?");
        uint32_t id = it->second.id;
        if (class_of[id] == UINT32_MAX) {
          class_of[id] = cls;
          queue.push_back(id);
        }
      }
    }
    UnipotentClass uc;
    uc.size = Int((unsigned long)queue.size());
    uc.centraliser_order = expected / uc.size;
    uc.representative = mats[start];
    uc.jordan = mats[start].jordan_type();
    uc.representative_word = elements.at(mats[start].packed_bytes()).word;
    out.classes.push_back(std::move(uc));
  }
  std::sort(out.classes.begin(), out.classes.end(), [](const UnipotentClass& a, const UnipotentClass& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.jordan < b.jordan;
  });
  return out;
}

}  // namespace green::count
