#include "greenfn/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace green::weyl {

namespace {

struct VecHash {
  size_t operator()(const std::vector<uint16_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (uint16_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

void connect_simple(std::vector<std::vector<int>>& a, int i, int j) {
  a[i][j] = -1;
  a[j][i] = -1;
}

// Double or triple edge with the arrow pointing towards j.
void connect_arrow(std::vector<std::vector<int>>& a, int i, int j, int mult) {
  a[i][j] = -1;
  a[j][i] = -mult;
}

}  // namespace

CartanDatum build_cartan(const std::string& label) {
  std::string s;
  for (char c : label)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '_') s.push_back(c);
  if (s.empty()) throw ParseError("empty type label", 0);
  char series = char(std::toupper(static_cast<unsigned char>(s[0])));
  int rank = 0;
  try {
    rank = std::stoi(s.substr(1));
  } catch (...) {
    throw ParseError("bad rank in type label '" + label + "'", 1);
  }
  auto bad = [&]() -> CartanDatum {
    throw ParseError("unsupported type label '" + label + "'", 0);
  };

  CartanDatum cd;
  cd.label = std::string(1, series) + std::to_string(rank);
  cd.rank = rank;
  cd.a.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) cd.a[i][i] = 2;
  auto& a = cd.a;

  // Epsilon defaults to the alternating colouring along labels; the forked
  // types override below to match the bipartition of their diagrams.
  cd.epsilon.assign(rank, 0);
  for (int i = 0; i < rank; ++i) cd.epsilon[i] = (i % 2 == 0) ? 1 : -1;

  switch (series) {
    case 'A':
      if (rank < 1) return bad();
      for (int i = 0; i + 1 < rank; ++i) connect_simple(a, i, i + 1);
      break;
    case 'B':
      if (rank < 2) return bad();
      connect_arrow(a, 1, 0, 2);  // arrow towards node 1
      for (int i = 1; i + 1 < rank; ++i) connect_simple(a, i, i + 1);
      break;
    case 'C':
      if (rank < 2) return bad();
      connect_arrow(a, 0, 1, 2);  // arrow towards node 2
      for (int i = 1; i + 1 < rank; ++i) connect_simple(a, i, i + 1);
      break;
    case 'D':
      if (rank < 4) return bad();
      connect_simple(a, 0, 2);
      connect_simple(a, 1, 2);
      for (int i = 2; i + 1 < rank; ++i) connect_simple(a, i, i + 1);
      cd.epsilon[0] = 1;
      cd.epsilon[1] = 1;
      for (int i = 2; i < rank; ++i) cd.epsilon[i] = (i % 2 == 0) ? -1 : 1;
      break;
    case 'G':
      if (rank != 2) return bad();
      connect_arrow(a, 0, 1, 3);
      break;
    case 'F':
      if (rank != 4) return bad();
      connect_simple(a, 0, 1);
      connect_arrow(a, 1, 2, 2);
      connect_simple(a, 2, 3);
      break;
    case 'E': {
      if (rank < 6 || rank > 8) return bad();
      // chain 1-3-4-5-...-n with 2 attached to 4
      connect_simple(a, 0, 2);
      connect_simple(a, 1, 3);
      for (int i = 2; i + 1 < rank; ++i) connect_simple(a, i, i + 1);
      // bipartite colouring: 1+, 3-, 4+, 2-, 5-, 6+, 7-, 8+
      static const int eps678[3][8] = {{1, -1, -1, 1, -1, 1, 0, 0},
                                       {1, -1, -1, 1, -1, 1, -1, 0},
                                       {1, -1, -1, 1, -1, 1, -1, 1}};
      for (int i = 0; i < rank; ++i) cd.epsilon[i] = eps678[rank - 6][i];
      break;
    }
    default:
      return bad();
  }

  // Sanity: proper 2-colouring of the diagram.
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (i != j && a[i][j] != 0 && cd.epsilon[i] != -cd.epsilon[j])
        throw ValidationError("epsilon is not alternating on an edge of " + cd.label);
  return cd;
}

RootIndex RootSystem::simple_root(int i) const { return simple_index.at(size_t(i)); }

std::optional<RootIndex> RootSystem::find_root(const std::vector<int>& coords) const {
  for (int r = 0; r < root_count(); ++r)
    if (roots[r] == coords) return r;
  return std::nullopt;
}

int RootSystem::string_p(RootIndex alpha, RootIndex beta) const {
  std::vector<int> c = roots[beta];
  int p = 0;
  for (;;) {
    for (int k = 0; k < rank; ++k) c[k] += roots[alpha][k];
    if (!find_root(c)) return p;
    ++p;
    if (p > 4) throw ValidationError("root string longer than 4");
  }
}

int RootSystem::string_q(RootIndex alpha, RootIndex beta) const {
  std::vector<int> c = roots[beta];
  int q = 0;
  for (;;) {
    for (int k = 0; k < rank; ++k) c[k] -= roots[alpha][k];
    if (!find_root(c)) return q;
    ++q;
    if (q > 4) throw ValidationError("root string longer than 4");
  }
}

RootSystem generate_roots(const CartanDatum& cd) {
  RootSystem rs;
  rs.cartan = cd;
  rs.rank = cd.rank;

  // Closure of the simple roots under all s_i.
  std::map<std::vector<int>, int> seen;
  std::vector<std::vector<int>> pool;
  for (int i = 0; i < cd.rank; ++i) {
    std::vector<int> c(cd.rank, 0);
    c[i] = 1;
    seen.emplace(c, int(pool.size()));
    pool.push_back(c);
  }
  const size_t hard_cap = 1000;  // > |Phi(E8)| = 240; closure must terminate well below
  for (size_t head = 0; head < pool.size(); ++head) {
    std::vector<int> v = pool[head];
    for (int i = 0; i < cd.rank; ++i) {
      // s_i(v) = v - <sum_j v_j a_ij> alpha_i
      long long pairing = 0;
      for (int j = 0; j < cd.rank; ++j) pairing += (long long)cd.a[i][j] * v[j];
      std::vector<int> w = v;
      w[i] -= int(pairing);
      if (!seen.count(w)) {
        seen.emplace(w, int(pool.size()));
        pool.push_back(w);
        if (pool.size() > hard_cap)
          throw ValidationError("root closure did not terminate; malformed Cartan matrix?");
      }
    }
  }

  auto height_of = [](const std::vector<int>& v) {
    int h = 0;
    for (int x : v) h += x;
    return h;
  };
  std::vector<std::vector<int>> pos;
  for (auto& v : pool) {
    int h = height_of(v);
    bool has_pos = false, has_neg = false;
    for (int x : v) {
      if (x > 0) has_pos = true;
      if (x < 0) has_neg = true;
    }
    if (has_pos && has_neg) throw ValidationError("mixed-sign root encountered");
    if (h > 0) pos.push_back(v);
  }
  if (2 * pos.size() != pool.size()) throw ValidationError("roots do not split into +/- halves");

  std::sort(pos.begin(), pos.end(), [&](const auto& x, const auto& y) {
    int hx = height_of(x), hy = height_of(y);
    if (hx != hy) return hx < hy;
    return x < y;
  });

  rs.positive_count = int(pos.size());
  rs.roots = pos;
  for (auto& v : pos) {
    std::vector<int> n = v;
    for (int& x : n) x = -x;
    rs.roots.push_back(n);
  }
  rs.height.resize(rs.roots.size());
  for (size_t r = 0; r < rs.roots.size(); ++r) rs.height[r] = height_of(rs.roots[r]);

  std::map<std::vector<int>, int> index;
  for (int r = 0; r < rs.root_count(); ++r) index.emplace(rs.roots[r], r);

  rs.simple_index.resize(cd.rank);
  for (int i = 0; i < cd.rank; ++i) {
    std::vector<int> c(cd.rank, 0);
    c[i] = 1;
    rs.simple_index[i] = index.at(c);
  }

  rs.reflection.assign(cd.rank, std::vector<RootIndex>(rs.root_count()));
  for (int i = 0; i < cd.rank; ++i) {
    for (int r = 0; r < rs.root_count(); ++r) {
      const auto& v = rs.roots[r];
      long long pairing = 0;
      for (int j = 0; j < cd.rank; ++j) pairing += (long long)cd.a[i][j] * v[j];
      std::vector<int> w = v;
      w[i] -= int(pairing);
      auto it = index.find(w);
      if (it == index.end()) throw ValidationError("reflection left the root system");
      rs.reflection[i][r] = it->second;
    }
  }
  return rs;
}

WeylElement identity_element(const RootSystem& rs) {
  WeylElement e;
  e.perm.resize(rs.root_count());
  for (int r = 0; r < rs.root_count(); ++r) e.perm[r] = uint16_t(r);
  return e;
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  WeylElement w;
  w.perm.assign(rs.reflection[i].begin(), rs.reflection[i].end());
  w.word = {i};
  w.length = 1;
  return w;
}

WeylElement multiply(const RootSystem& rs, const WeylElement& x, const WeylElement& y) {
  WeylElement r;
  r.perm.resize(rs.root_count());
  for (int a = 0; a < rs.root_count(); ++a) r.perm[a] = x.perm[y.perm[a]];
  r.word = x.word;
  r.word.insert(r.word.end(), y.word.begin(), y.word.end());
  int inv = 0;
  for (int a = 0; a < rs.positive_count; ++a)
    if (r.perm[a] >= rs.positive_count) ++inv;
  r.length = inv;
  return r;
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  WeylElement r;
  r.perm.resize(rs.root_count());
  for (int a = 0; a < rs.root_count(); ++a) r.perm[w.perm[a]] = uint16_t(a);
  r.word.assign(w.word.rbegin(), w.word.rend());
  r.length = w.length;
  return r;
}

std::vector<RootIndex> inversion_set(const RootSystem& rs, const WeylElement& w) {
  std::vector<RootIndex> out;
  for (int a = 0; a < rs.positive_count; ++a)
    if (w.perm[a] >= rs.positive_count) out.push_back(a);
  return out;
}

WeylElement element_from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w = identity_element(rs);
  for (int i : word) {
    if (i < 0 || i >= rs.rank) throw ParseError("generator index out of range", size_t(i));
    w = multiply(rs, w, simple_reflection(rs, i));
  }
  return w;
}

std::vector<WeylElement> enumerate_by_length(const RootSystem& rs, int maxlen,
                                             const EnumerationOptions& opts) {
  std::vector<WeylElement> out;
  std::unordered_map<std::vector<uint16_t>, size_t, VecHash> level;  // perm -> index in `frontier`
  std::vector<WeylElement> frontier{identity_element(rs)};

  auto keep = [&](const WeylElement& w) {
    if (!opts.keep_positive) return true;
    for (RootIndex a : *opts.keep_positive)
      if (w.perm[a] >= rs.positive_count) return false;
    return true;
  };

  int len = 0;
  while (!frontier.empty()) {
    for (auto& w : frontier)
      if (keep(w)) out.push_back(w);
    if (maxlen >= 0 && len >= maxlen) break;

    std::vector<WeylElement> next;
    level.clear();
    for (const auto& w : frontier) {
      for (int i = 0; i < rs.rank; ++i) {
        RootIndex ai = rs.simple_root(i);
        if (w.perm[ai] >= rs.positive_count) continue;  // descent: l would drop
        WeylElement c;
        c.perm.resize(rs.root_count());
        const auto& si = rs.reflection[i];
        for (int a = 0; a < rs.root_count(); ++a) c.perm[a] = w.perm[si[a]];
        auto it = level.find(c.perm);
        if (it == level.end()) {
          c.word = w.word;
          c.word.push_back(i);
          c.length = len + 1;
          level.emplace(c.perm, next.size());
          next.push_back(std::move(c));
        } else {
          std::vector<int> cand = w.word;
          cand.push_back(i);
          if (cand < next[it->second].word) next[it->second].word = std::move(cand);
        }
      }
    }
    std::sort(next.begin(), next.end(),
              [](const WeylElement& a, const WeylElement& b) { return a.word < b.word; });
    if (out.size() + next.size() > opts.element_cap)
      throw ValidationError("enumeration cap exceeded; completed length " + std::to_string(len));
    frontier = std::move(next);
    ++len;
  }
  return out;
}

namespace {

// Backtracking factorisation of g(t) = sum_w t^{l(w)} into prod (t^{d_i}-1)/(t-1).
bool factor_degrees(const Poly& g, int factors_left, int min_d, std::vector<int>& acc) {
  if (factors_left == 0) return g.degree() == 0 && g.coeff(0) == 1;
  for (int d = min_d; d <= g.degree() + 1; ++d) {
    std::vector<Rat> ones(size_t(d), Rat(1));
    Poly sigma{std::vector<Rat>(ones)};
    Poly q;
    try {
      q = g.divide_exact(sigma);
    } catch (const ValidationError&) {
      continue;
    }
    acc.push_back(d);
    if (factor_degrees(q, factors_left - 1, d, acc)) return true;
    acc.pop_back();
  }
  return false;
}

const std::map<std::string, std::vector<int>> kBundledDegrees = {
    {"E7", {2, 6, 8, 10, 12, 14, 18}},
    {"E8", {2, 8, 12, 14, 18, 20, 24, 30}},
};

}  // namespace

Int PoincareData::weyl_sum_q(const Int& q) const {
  Int acc = 0, p = 1;
  for (const Int& c : coefficients) {
    acc += c * p;
    p *= q;
  }
  return acc;
}

Int PoincareData::group_order(const Int& q) const {
  Int acc = pow_int(q, (unsigned long)positive_count);
  for (int d : degrees) acc *= pow_int(q, (unsigned long)d) - 1;
  return acc;
}

Poly PoincareData::group_order_poly() const {
  Poly acc = Poly::monomial(Rat(1), size_t(positive_count));
  for (int d : degrees) {
    Poly f = Poly::monomial(Rat(1), size_t(d)) - Poly(Rat(1));
    acc = acc * f;
  }
  return acc;
}

PoincareData poincare(const RootSystem& rs) {
  PoincareData pd;
  pd.positive_count = rs.positive_count;

  auto bundled = kBundledDegrees.find(rs.cartan.label);
  if (bundled != kBundledDegrees.end()) {
    pd.degrees = bundled->second;
    Poly g(Rat(1));
    for (int d : pd.degrees) {
      std::vector<Rat> ones(size_t(d), Rat(1));
      g = g * Poly(std::move(ones));
    }
    for (int i = 0; i <= g.degree(); ++i) pd.coefficients.push_back(to_int(g.coeff(size_t(i))));
    pd.group_size = 1;
    for (int d : pd.degrees) pd.group_size *= d;
    return pd;
  }

  auto all = enumerate_by_length(rs, -1);
  pd.coefficients.assign(size_t(rs.positive_count) + 1, Int(0));
  for (const auto& w : all) pd.coefficients[size_t(w.length)] += 1;
  pd.group_size = Int(all.size());

  std::vector<Rat> c;
  for (const Int& x : pd.coefficients) c.emplace_back(x);
  Poly g{std::move(c)};
  std::vector<int> degs;
  if (!factor_degrees(g, rs.rank, 2, degs))
    throw ValidationError("Poincare polynomial does not factor; bad root system?");
  pd.degrees = degs;
  return pd;
}

ConjugacyClasses conjugacy_classes(const RootSystem& rs, size_t cap) {
  ConjugacyClasses cc;
  EnumerationOptions opts;
  opts.element_cap = cap;
  cc.elements = enumerate_by_length(rs, -1, opts);

  std::unordered_map<std::vector<uint16_t>, uint32_t, VecHash> index;
  index.reserve(cc.elements.size() * 2);
  for (uint32_t i = 0; i < cc.elements.size(); ++i) index.emplace(cc.elements[i].perm, i);

  cc.class_of.assign(cc.elements.size(), UINT32_MAX);
  std::vector<std::vector<uint16_t>> gens, gens_inv;
  for (int i = 0; i < rs.rank; ++i) {
    gens.push_back(std::vector<uint16_t>(rs.reflection[i].begin(), rs.reflection[i].end()));
  }

  for (uint32_t start = 0; start < cc.elements.size(); ++start) {
    if (cc.class_of[start] != UINT32_MAX) continue;
    uint32_t cls = uint32_t(cc.classes.size());
    ConjugacyClass c;
    std::vector<uint32_t> queue{start};
    cc.class_of[start] = cls;
    for (size_t head = 0; head < queue.size(); ++head) {
      const auto& w = cc.elements[queue[head]].perm;
      for (const auto& s : gens) {
        std::vector<uint16_t> conj(w.size());
        for (size_t a = 0; a < w.size(); ++a) conj[a] = s[w[s[a]]];  // s w s (s is an involution)
        uint32_t j = index.at(conj);
        if (cc.class_of[j] == UINT32_MAX) {
          cc.class_of[j] = cls;
          queue.push_back(j);
        }
      }
    }
    c.representative = cc.elements[start];  // enumeration order is (length, lex word)
    c.size = Int(queue.size());
    std::sort(queue.begin(), queue.end());
    c.members = std::move(queue);
    cc.classes.push_back(std::move(c));
  }
  return cc;
}

Int torus_order(const RootSystem& rs, const WeylElement& w, const Int& q) {
  // det(q*id - M) over the rationals where M is w on the simple-root basis.
  int n = rs.rank;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
  for (int j = 0; j < n; ++j) {
    const auto& img = rs.roots[w.perm[rs.simple_root(j)]];
    for (int i = 0; i < n; ++i) m[i][j] = -Rat(img[i]);
    m[j][j] += Rat(q);
  }
  Rat det(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (int c2 = col; c2 < n; ++c2) m[r][c2] -= f * m[col][c2];
    }
  }
  Int d = to_int(det);
  return d < 0 ? Int(-d) : d;
}

std::vector<RootIndex> diagram_involution(const RootSystem& rs, const std::vector<int>& simple_map) {
  if (int(simple_map.size()) != rs.rank) throw ValidationError("bad simple-root map");
  std::vector<RootIndex> out(rs.root_count());
  for (int r = 0; r < rs.root_count(); ++r) {
    std::vector<int> img(rs.rank, 0);
    for (int i = 0; i < rs.rank; ++i) img[size_t(simple_map[i])] += rs.roots[r][i];
    auto idx = rs.find_root(img);
    if (!idx) throw ValidationError("diagram map does not preserve the root system");
    out[r] = *idx;
  }
  for (int r = 0; r < rs.root_count(); ++r)
    if (out[out[r]] != r) throw ValidationError("diagram map is not an involution");
  return out;
}

}  // namespace green::weyl
