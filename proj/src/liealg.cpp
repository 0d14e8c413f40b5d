#include "greenfn/liealg.hpp"

#include <algorithm>
#include <map>

namespace green::liealg {

using weyl::RootIndex;
using weyl::RootSystem;

void SpMat::add(int r, int c, long long v) {
  if (v == 0) return;
  auto& row = rows_[size_t(r)];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& p, int col) { return p.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

long long SpMat::get(int r, int c) const {
  const auto& row = rows_[size_t(r)];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& p, int col) { return p.first < col; });
  return (it != row.end() && it->first == c) ? it->second : 0;
}

SpMat SpMat::operator*(const SpMat& o) const {
  SpMat out(n_);
  std::vector<long long> acc(size_t(n_), 0);
  std::vector<int> touched;
  for (int r = 0; r < n_; ++r) {
    touched.clear();
    for (const auto& [k, v] : rows_[size_t(r)]) {
      for (const auto& [c, w] : o.rows_[size_t(k)]) {
        if (acc[size_t(c)] == 0 && v * w != 0) touched.push_back(c);
        acc[size_t(c)] += v * w;
      }
    }
    std::sort(touched.begin(), touched.end());
    auto& row = out.rows_[size_t(r)];
    for (int c : touched) {
      if (acc[size_t(c)] != 0) row.emplace_back(c, acc[size_t(c)]);
      acc[size_t(c)] = 0;
    }
  }
  return out;
}

SpMat SpMat::operator+(const SpMat& o) const {
  SpMat out = *this;
  for (int r = 0; r < n_; ++r)
    for (const auto& [c, v] : o.rows_[size_t(r)]) out.add(r, c, v);
  return out;
}

SpMat SpMat::operator-(const SpMat& o) const {
  SpMat out = *this;
  for (int r = 0; r < n_; ++r)
    for (const auto& [c, v] : o.rows_[size_t(r)]) out.add(r, c, -v);
  return out;
}

SpMat SpMat::scaled(long long f) const {
  SpMat out(n_);
  if (f == 0) return out;
  for (int r = 0; r < n_; ++r) {
    out.rows_[size_t(r)] = rows_[size_t(r)];
    for (auto& [c, v] : out.rows_[size_t(r)]) v *= f;
  }
  return out;
}

SpMat SpMat::divided_exact(long long f) const {
  SpMat out(n_);
  for (int r = 0; r < n_; ++r) {
    out.rows_[size_t(r)] = rows_[size_t(r)];
    for (auto& [c, v] : out.rows_[size_t(r)]) {
      if (v % f != 0)
        throw ValidationError("non-exact division in Chevalley basis recursion");
      v /= f;
    }
  }
  return out;
}

bool SpMat::is_zero() const {
  for (const auto& r : rows_)
    if (!r.empty()) return false;
  return true;
}

size_t SpMat::nonzero_count() const {
  size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

ModuleBasis module_basis(const RootSystem& rs) {
  ModuleBasis mb;
  mb.dimension = rs.rank + rs.root_count();
  mb.basis_root.assign(size_t(mb.dimension), -1);
  mb.basis_cartan.assign(size_t(mb.dimension), -1);
  mb.pos_of_root.assign(size_t(rs.root_count()), -1);
  mb.pos_of_cartan.assign(size_t(rs.rank), -1);

  // positive roots by decreasing height (root order breaks ties), then u_i,
  // then negative roots by decreasing signed height
  std::vector<RootIndex> pos, neg;
  for (int r = 0; r < rs.positive_count; ++r) pos.push_back(r);
  for (int r = rs.positive_count; r < rs.root_count(); ++r) neg.push_back(r);
  std::stable_sort(pos.begin(), pos.end(),
                   [&](RootIndex a, RootIndex b) { return rs.height[a] > rs.height[b]; });
  std::stable_sort(neg.begin(), neg.end(),
                   [&](RootIndex a, RootIndex b) { return rs.height[a] > rs.height[b]; });

  int p = 0;
  for (RootIndex r : pos) {
    mb.basis_root[size_t(p)] = r;
    mb.pos_of_root[size_t(r)] = p;
    ++p;
  }
  for (int i = 0; i < rs.rank; ++i) {
    mb.basis_cartan[size_t(p)] = i;
    mb.pos_of_cartan[size_t(i)] = p;
    ++p;
  }
  for (RootIndex r : neg) {
    mb.basis_root[size_t(p)] = r;
    mb.pos_of_root[size_t(r)] = p;
    ++p;
  }
  return mb;
}

AdjointRep build_operators(const RootSystem& rs) {
  AdjointRep rep;
  rep.rs = &rs;
  rep.basis = module_basis(rs);
  const auto& mb = rep.basis;
  const int dim = mb.dimension;

  for (int i = 0; i < rs.rank; ++i) {
    RootIndex ai = rs.simple_root(i);
    RootIndex mai = rs.negative_of(ai);
    SpMat ei(dim), fi(dim);

    // e_i(u_j) = |a_ji| v_{alpha_i};  f_i(u_j) = |a_ji| v_{-alpha_i}
    for (int j = 0; j < rs.rank; ++j) {
      long long c = std::abs((long long)rs.cartan.a[j][i]);
      ei.add(mb.pos_of_root[size_t(ai)], mb.pos_of_cartan[size_t(j)], c);
      fi.add(mb.pos_of_root[size_t(mai)], mb.pos_of_cartan[size_t(j)], c);
    }
    for (int r = 0; r < rs.root_count(); ++r) {
      int col = mb.pos_of_root[size_t(r)];
      // e_i(v_alpha)
      if (r == mai) {
        ei.add(mb.pos_of_cartan[size_t(i)], col, 1);
      } else if (r != ai) {
        std::vector<int> up = rs.roots[size_t(r)];
        for (int k = 0; k < rs.rank; ++k) up[size_t(k)] += rs.roots[size_t(ai)][size_t(k)];
        if (auto tgt = rs.find_root(up))
          ei.add(mb.pos_of_root[size_t(*tgt)], col, rs.string_q(ai, r) + 1);
      }
      // f_i(v_alpha)
      if (r == ai) {
        fi.add(mb.pos_of_cartan[size_t(i)], col, 1);
      } else if (r != mai) {
        std::vector<int> dn = rs.roots[size_t(r)];
        for (int k = 0; k < rs.rank; ++k) dn[size_t(k)] -= rs.roots[size_t(ai)][size_t(k)];
        if (auto tgt = rs.find_root(dn))
          fi.add(mb.pos_of_root[size_t(*tgt)], col, rs.string_p(ai, r) + 1);
      }
    }
    rep.h.push_back(ei.bracket(fi));
    rep.e.push_back(std::move(ei));
    rep.f.push_back(std::move(fi));
  }
  return rep;
}

namespace {

bool strictly_upper(const SpMat& m) {
  for (int r = 0; r < m.size(); ++r)
    for (const auto& [c, v] : m.row(r))
      if (c <= r) return false;
  return true;
}

bool diagonal(const SpMat& m) {
  for (int r = 0; r < m.size(); ++r)
    for (const auto& [c, v] : m.row(r))
      if (c != r) return false;
  return true;
}

// Incremental echelon span of matrices viewed as flat vectors, modulo a
// large prime.  The verified Serre relations bound the true span dimension
// above by |I|+|Phi|, so a matching modular rank certifies equality.
class ModSpan {
 public:
  // returns true when the matrix enlarged the span
  bool add(const SpMat& m) {
    std::map<long long, long long> v;
    for (int r = 0; r < m.size(); ++r)
      for (const auto& [c, val] : m.row(r)) {
        long long x = modp(val);
        if (x) v[(long long)r * m.size() + c] = x;
      }
    for (const auto& b : basis_) {
      if (v.empty()) break;
      long long lead = v.begin()->first;
      if (b.begin()->first != lead) continue;
      long long f = (long long)((__int128)v.begin()->second * inv(b.begin()->second) % P);
      for (const auto& [k, bv] : b) {
        long long delta = (long long)((__int128)f * bv % P);
        auto it = v.find(k);
        long long nv = modp((it != v.end() ? it->second : 0) - delta);
        if (nv == 0) {
          if (it != v.end()) v.erase(it);
        } else {
          v[k] = nv;
        }
      }
    }
    if (v.empty()) return false;
    basis_.push_back(std::move(v));
    std::sort(basis_.begin(), basis_.end(),
              [](const auto& a, const auto& b) { return a.begin()->first < b.begin()->first; });
    return true;
  }
  int rank() const { return int(basis_.size()); }

 private:
  static constexpr long long P = 2147483629;
  static long long modp(long long v) { return ((v % P) + P) % P; }
  static long long inv(long long b) {
    long long r = 1, e = P - 2;
    b = modp(b);
    while (e) {
      if (e & 1) r = (long long)((__int128)r * b % P);
      b = (long long)((__int128)b * b % P);
      e >>= 1;
    }
    return r;
  }
  std::vector<std::map<long long, long long>> basis_;
};

}  // namespace

RelationReport verify_chevalley_relations(const AdjointRep& rep) {
  RelationReport rr;
  const auto& rs = *rep.rs;
  const auto& a = rs.cartan.a;
  const int rank = rs.rank;
  rr.cartan_commute = rr.weights = rr.opposite_pairs = rr.serre = true;

  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      if (!rep.h[size_t(i)].bracket(rep.h[size_t(j)]).is_zero()) {
        rr.cartan_commute = false;
        rr.failures.push_back("[h,h] i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1));
      }
      // weight relations: [h_i, e_j] = a_ij e_j and [h_i, f_j] = -a_ij f_j
      if (!(rep.h[size_t(i)].bracket(rep.e[size_t(j)]) - rep.e[size_t(j)].scaled(a[i][j])).is_zero() ||
          !(rep.h[size_t(i)].bracket(rep.f[size_t(j)]) + rep.f[size_t(j)].scaled(a[i][j])).is_zero()) {
        rr.weights = false;
        rr.failures.push_back("[h,e/f] i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1));
      }
      if (i != j && !rep.e[size_t(i)].bracket(rep.f[size_t(j)]).is_zero()) {
        rr.opposite_pairs = false;
        rr.failures.push_back("[e,f] i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1));
      }
      if (i != j) {
        // Serre: ad(e_i)^{1-a_ij}(e_j) = 0, and the same for f
        SpMat x = rep.e[size_t(j)], y = rep.f[size_t(j)];
        for (int k = 0; k < 1 - a[i][j]; ++k) {
          x = rep.e[size_t(i)].bracket(x);
          y = rep.f[size_t(i)].bracket(y);
        }
        if (!x.is_zero() || !y.is_zero()) {
          rr.serre = false;
          rr.failures.push_back("serre i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1));
        }
      }
    }

  // span dimension: bracket closure of {e_i, f_i}
  std::vector<SpMat> closure;
  ModSpan span;
  for (int i = 0; i < rank; ++i) {
    for (const SpMat* g : {&rep.e[size_t(i)], &rep.f[size_t(i)]})
      if (span.add(*g)) closure.push_back(*g);
  }
  int dim_target = rank + rs.root_count();
  size_t head = 0;
  while (span.rank() < dim_target && head < closure.size()) {
    for (int i = 0; i < rank; ++i) {
      SpMat be = rep.e[size_t(i)].bracket(closure[head]);
      if (span.add(be)) closure.push_back(std::move(be));
      SpMat bf = rep.f[size_t(i)].bracket(closure[head]);
      if (span.add(bf)) closure.push_back(std::move(bf));
    }
    ++head;
  }
  int r = span.rank();
  rr.dimension = r;
  rr.span_dimension = (r == dim_target);
  if (!rr.span_dimension)
    rr.failures.push_back("span dimension " + std::to_string(r) + " != " + std::to_string(dim_target));
  return rr;
}

void canonical_basis(AdjointRep& rep, const std::vector<int>& epsilon, bool pivot_largest) {
  const auto& rs = *rep.rs;
  rep.epsilon = epsilon;
  rep.canonical.assign(size_t(rs.root_count()), SpMat());

  std::vector<RootIndex> by_height;
  for (int r = 0; r < rs.root_count(); ++r) by_height.push_back(r);
  std::sort(by_height.begin(), by_height.end(), [&](RootIndex x, RootIndex y) {
    return std::abs(rs.height[size_t(x)]) < std::abs(rs.height[size_t(y)]);
  });

  for (RootIndex r : by_height) {
    int ht = rs.height[size_t(r)];
    if (ht == 1 || ht == -1) {
      // simple or negative-simple
      for (int i = 0; i < rs.rank; ++i) {
        if (r == rs.simple_root(i)) rep.canonical[size_t(r)] = rep.e[size_t(i)].scaled(epsilon[size_t(i)]);
        if (r == rs.negative_of(rs.simple_root(i)))
          rep.canonical[size_t(r)] = rep.f[size_t(i)].scaled(-epsilon[size_t(i)]);
      }
      if (rep.canonical[size_t(r)].size() == 0 && std::abs(ht) == 1) {
        // non-simple height-one roots cannot occur
        throw ValidationError("height-one root is not simple");
      }
      continue;
    }
    if (ht > 1) {
      // pick i with alpha - alpha_i a root; [e_i, e_{alpha-alpha_i}] = (q+1) e_alpha
      int chosen = -1;
      for (int k = 0; k < rs.rank; ++k) {
        int i = pivot_largest ? rs.rank - 1 - k : k;
        std::vector<int> down = rs.roots[size_t(r)];
        for (int t = 0; t < rs.rank; ++t)
          down[size_t(t)] -= rs.roots[size_t(rs.simple_root(i))][size_t(t)];
        if (auto prev = rs.find_root(down)) {
          RootIndex ai = rs.simple_root(i);
          long long denom = rs.string_q(ai, *prev) + 1;
          rep.canonical[size_t(r)] =
              rep.e[size_t(i)].bracket(rep.canonical[size_t(*prev)]).divided_exact(denom);
          chosen = i;
          break;
        }
      }
      if (chosen < 0) throw ValidationError("no descent for positive root in basis recursion");
    } else {
      // negative root: [f_i, e_{alpha+alpha_i}] = (p+1) e_alpha
      int chosen = -1;
      for (int k = 0; k < rs.rank; ++k) {
        int i = pivot_largest ? rs.rank - 1 - k : k;
        std::vector<int> up = rs.roots[size_t(r)];
        for (int t = 0; t < rs.rank; ++t)
          up[size_t(t)] += rs.roots[size_t(rs.simple_root(i))][size_t(t)];
        if (auto prev = rs.find_root(up)) {
          RootIndex ai = rs.simple_root(i);
          long long denom = rs.string_p(ai, *prev) + 1;
          rep.canonical[size_t(r)] =
              rep.f[size_t(i)].bracket(rep.canonical[size_t(*prev)]).divided_exact(denom);
          chosen = i;
          break;
        }
      }
      if (chosen < 0) throw ValidationError("no ascent for negative root in basis recursion");
    }
  }

  // consistency across every admissible pivot, positive roots and negatives alike
  for (RootIndex r = 0; r < rs.root_count(); ++r) {
    for (int i = 0; i < rs.rank; ++i) {
      RootIndex ai = rs.simple_root(i);
      std::vector<int> up = rs.roots[size_t(r)];
      for (int t = 0; t < rs.rank; ++t) up[size_t(t)] += rs.roots[size_t(ai)][size_t(t)];
      auto tgt = rs.find_root(up);
      if (!tgt || r == rs.negative_of(ai)) continue;
      long long c = rs.string_q(ai, r) + 1;
      SpMat lhs = rep.e[size_t(i)].bracket(rep.canonical[size_t(r)]);
      SpMat rhs = rep.canonical[size_t(*tgt)].scaled(c);
      if (!(lhs - rhs).is_zero())
        throw ValidationError("canonical basis inconsistent at root index " + std::to_string(r) +
                              " with pivot " + std::to_string(i + 1));
    }
  }

  // triangularity in the module order
  for (int r = 0; r < rs.positive_count; ++r)
    if (!strictly_upper(rep.canonical[size_t(r)]))
      throw ValidationError("positive canonical element not strictly upper triangular");
  for (int i = 0; i < rs.rank; ++i)
    if (!diagonal(rep.h[size_t(i)])) throw ValidationError("h_i not diagonal");
}

long long structure_constant(const AdjointRep& rep, int alpha, int beta) {
  const auto& rs = *rep.rs;
  std::vector<int> sum = rs.roots[size_t(alpha)];
  for (int t = 0; t < rs.rank; ++t) sum[size_t(t)] += rs.roots[size_t(beta)][size_t(t)];
  auto tgt = rs.find_root(sum);
  if (!tgt) throw ValidationError("alpha+beta is not a root");
  SpMat br = rep.canonical[size_t(alpha)].bracket(rep.canonical[size_t(beta)]);
  const SpMat& target = rep.canonical[size_t(*tgt)];
  // find a nonzero reference entry
  for (int r = 0; r < target.size(); ++r) {
    if (target.row(r).empty()) continue;
    auto [c, v] = target.row(r)[0];
    long long num = br.get(r, c);
    if (num % v != 0) throw ValidationError("bracket not proportional to canonical element");
    long long n = num / v;
    if (!(br - target.scaled(n)).is_zero())
      throw ValidationError("bracket not proportional to canonical element");
    return n;
  }
  throw ValidationError("zero canonical element");
}

}  // namespace green::liealg
