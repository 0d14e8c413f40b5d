#include "greenfn/chevgroup.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

namespace green::chevgroup {

using gfp::FieldSpec;
using gfp::PackedMatrix;
using liealg::SpMat;
using weyl::RootIndex;

namespace {

struct WordParser {
  const std::string& s;
  size_t i = 0;
  explicit WordParser(const std::string& t) : s(t) {}

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", i);
  }
  long integer() {
    ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) throw ParseError("expected integer", i);
    return std::stol(s.substr(start, i - start));
  }

  // scalar := signed integer | polynomial in z, e.g. "z", "2z+1", "-z+2"
  void scalar(long& lo, long& hi) {
    lo = hi = 0;
    ws();
    bool first = true;
    for (;;) {
      ws();
      long sign = 1;
      if (eat('+')) sign = 1;
      else if (eat('-')) sign = -1;
      else if (!first) break;
      ws();
      long coef = 1;
      bool have_coef = false;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        coef = integer();
        have_coef = true;
      }
      ws();
      if (i < s.size() && s[i] == 'z') {
        ++i;
        hi += sign * coef;
      } else {
        if (!have_coef) {
          if (first) throw ParseError("expected scalar", i);
          throw ParseError("dangling sign in scalar", i);
        }
        lo += sign * coef;
      }
      first = false;
      ws();
      if (i >= s.size() || (s[i] != '+' && s[i] != '-')) break;
    }
  }

  WordSpec word() {
    WordSpec w;
    ws();
    if (i == s.size()) return w;  // empty word = identity
    for (;;) {
      ws();
      if (i >= s.size()) throw ParseError("expected factor", i);
      char kind = s[i];
      if (kind != 'x' && kind != 'h' && kind != 'n')
        throw ParseError("unknown factor kind '" + std::string(1, kind) + "'", i);
      ++i;
      expect('[');
      WordFactor f;
      f.kind = kind;
      f.coords.push_back(int(integer()));
      while (eat(',')) f.coords.push_back(int(integer()));
      expect(']');
      expect('(');
      scalar(f.lo, f.hi);
      expect(')');
      w.factors.push_back(std::move(f));
      if (!eat('*')) break;
    }
    ws();
    if (i != s.size()) throw ParseError("trailing characters in word", i);
    return w;
  }
};

std::string scalar_str(long lo, long hi) {
  if (hi == 0) return std::to_string(lo);
  std::string s;
  if (hi == 1) s = "z";
  else if (hi == -1) s = "-z";
  else s = std::to_string(hi) + "z";
  if (lo > 0) s += "+" + std::to_string(lo);
  else if (lo < 0) s += std::to_string(lo);
  return s;
}

}  // namespace

WordSpec parse_word(const std::string& text) {
  WordParser p(text);
  return p.word();
}

std::string print_word(const WordSpec& w) {
  std::string out;
  for (size_t i = 0; i < w.factors.size(); ++i) {
    const auto& f = w.factors[i];
    if (i) out += "*";
    out += f.kind;
    out += "[";
    for (size_t j = 0; j < f.coords.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(f.coords[j]);
    }
    out += "](" + scalar_str(f.lo, f.hi) + ")";
  }
  return out;
}

namespace {
// exactly one nonzero in every root-position column, sitting on a root row
bool root_lines_permuted(const liealg::ModuleBasis& mb, const PackedMatrix& g) {
  for (int col = 0; col < mb.dimension; ++col) {
    if (mb.basis_root[size_t(col)] < 0) continue;
    int hits = 0;
    for (int row = 0; row < mb.dimension; ++row) {
      if (g.get(row, col) == 0) continue;
      if (mb.basis_root[size_t(row)] < 0) return false;
      ++hits;
    }
    if (hits != 1) return false;
  }
  return true;
}
}  // namespace

Context::Context(const std::string& label, int p, int k) {
  rs_ = std::make_unique<weyl::RootSystem>(weyl::generate_roots(weyl::build_cartan(label)));
  rep_ = std::make_unique<liealg::AdjointRep>(liealg::build_operators(*rs_));
  liealg::canonical_basis(*rep_, rs_->cartan.epsilon);
  field_ = &gfp::field(p, k);

  const int dim = rep_->basis.dimension;
  layers_.resize(size_t(rs_->root_count()));
  for (int r = 0; r < rs_->root_count(); ++r) {
    // integer layers X^j / j!, exact division, until nilpotency
    std::vector<SpMat> int_layers;
    SpMat cur(dim);
    for (int d = 0; d < dim; ++d) cur.add(d, d, 1);
    int_layers.push_back(cur);
    const SpMat& x = rep_->canonical[size_t(r)];
    long long j = 1;
    for (;;) {
      cur = (cur * x).divided_exact(j);
      if (cur.is_zero()) break;
      int_layers.push_back(cur);
      ++j;
      if (j > dim) throw ValidationError("root element exponential did not terminate");
    }
    auto& red = layers_[size_t(r)];
    for (const auto& m : int_layers) {
      PackedMatrix pm(*field_, dim);
      for (int row = 0; row < dim; ++row)
        for (const auto& [col, v] : m.row(row)) pm.set(row, col, field_->from_int(v));
      red.push_back(std::move(pm));
    }
  }

  // per-root parameter sign for n_alpha(t); fixed by requiring a monomial lift
  nsign_.assign(size_t(rs_->root_count()), 1);
  auto looks_weyl_like = [&](const PackedMatrix& g) {
    return root_lines_permuted(rep_->basis, g);
  };
  for (int r = 0; r < rs_->root_count(); ++r) {
    auto build = [&](int sgn) {
      uint8_t u = field_->inv(1);
      if (sgn < 0) u = field_->neg(u);
      return root_element(r, 1) * root_element(rs_->negative_of(r), u) * root_element(r, 1);
    };
    if (looks_weyl_like(build(1))) {
      nsign_[size_t(r)] = 1;
    } else if (looks_weyl_like(build(-1))) {
      nsign_[size_t(r)] = -1;
    } else {
      throw ValidationError("no monomial Weyl representative at root " + std::to_string(r));
    }
  }

  // graph symmetry: only the order-2 E6 involution is wired up
  if (rs_->cartan.label == "E6") {
    std::vector<int> simple_map = {5, 1, 4, 3, 2, 0};
    tau_root_perm_ = weyl::diagram_involution(*rs_, simple_map);
    // tau e_alpha tau = e_{alpha^dagger} must hold over the integers
    const auto& mb = rep_->basis;
    auto tpos = [&](int posidx) {
      if (mb.basis_cartan[size_t(posidx)] >= 0)
        return mb.pos_of_cartan[size_t(simple_map[size_t(mb.basis_cartan[size_t(posidx)])])];
      return mb.pos_of_root[size_t(tau_root_perm_[size_t(mb.basis_root[size_t(posidx)])])];
    };
    for (int r = 0; r < rs_->root_count(); ++r) {
      const SpMat& ea = rep_->canonical[size_t(r)];
      const SpMat& eb = rep_->canonical[size_t(tau_root_perm_[size_t(r)])];
      SpMat conj(dim);
      for (int row = 0; row < dim; ++row)
        for (const auto& [col, v] : ea.row(row)) conj.add(tpos(row), tpos(col), v);
      if (!(conj - eb).is_zero())
        throw ValidationError("graph automorphism does not permute the canonical basis");
    }
    tau_ = std::make_unique<PackedMatrix>(*field_, dim);
    for (int pos = 0; pos < dim; ++pos) tau_->set(tpos(pos), pos, 1);
  }
}

const Context& Context::get(const std::string& label, int p, int k) {
  static std::mutex mu;
  static std::map<std::tuple<std::string, int, int>, std::unique_ptr<Context>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(label, p, k);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::unique_ptr<Context>(new Context(label, p, k))).first;
  return *it->second;
}

const PackedMatrix& Context::tau() const {
  if (!tau_) throw ValidationError("no graph symmetry for this type");
  return *tau_;
}

PackedMatrix Context::root_element(RootIndex alpha, uint8_t t) const {
  const auto& lay = layers_[size_t(alpha)];
  PackedMatrix acc = lay[0];
  uint8_t tp = 1;
  for (size_t j = 1; j < lay.size(); ++j) {
    tp = field_->mul(tp, t);
    if (tp == 0) break;
    acc = acc + lay[j].scaled(tp);
  }
  return acc;
}

PackedMatrix Context::weyl_rep(RootIndex alpha, uint8_t t) const {
  if (t == 0) throw ValidationError("n_alpha(0) is undefined");
  // the middle parameter sign depends on whether [e_a, e_-a] is +h or -h
  uint8_t u = field_->inv(t);
  if (nsign_[size_t(alpha)] < 0) u = field_->neg(u);
  return root_element(alpha, t) * root_element(rs_->negative_of(alpha), u) *
         root_element(alpha, t);
}

PackedMatrix Context::torus_element(RootIndex alpha, uint8_t t) const {
  if (t == 0) throw ValidationError("h_alpha(0) is undefined");
  return weyl_rep(alpha, t) * weyl_rep(alpha, 1).inverse();
}

PackedMatrix Context::wdot(const weyl::WeylElement& w) const {
  PackedMatrix acc = PackedMatrix::identity(*field_, dim());
  for (int i : w.word) acc = acc * weyl_rep(rs_->simple_root(i), 1);
  return acc;
}

PackedMatrix Context::wdot_twisted(const weyl::WeylElement& w, const FrobeniusSpec& fr) const {
  PackedMatrix nd = wdot(w);
  if (!fr.twisted || is_frobenius_fixed(nd, fr)) return nd;
  // search a torus correction h with F(h nd) = h nd
  int rank = rs_->rank;
  int units = field_->size() - 1;
  std::vector<int> digits(size_t(rank), 0);
  for (;;) {
    PackedMatrix h = PackedMatrix::identity(*field_, dim());
    for (int i = 0; i < rank; ++i)
      if (digits[size_t(i)] > 0)
        h = h * torus_element(rs_->simple_root(i), uint8_t(1 + digits[size_t(i)]));
    PackedMatrix cand = h * nd;
    if (is_frobenius_fixed(cand, fr)) return cand;
    int pos = 0;
    while (pos < rank && ++digits[size_t(pos)] == units) {
      digits[size_t(pos)] = 0;
      ++pos;
    }
    if (pos == rank) break;
  }
  throw ValidationError("no torus correction makes the representative F-fixed");
}

PackedMatrix Context::evaluate_word(const WordSpec& w) const {
  PackedMatrix acc = PackedMatrix::identity(*field_, dim());
  for (const auto& f : w.factors) {
    RootIndex r = root_from_coords(f.coords);
    uint8_t t = field_->from_pair(f.lo, f.hi);
    if (f.kind == 'x')
      acc = acc * root_element(r, t);
    else if (f.kind == 'n')
      acc = acc * weyl_rep(r, t);
    else if (f.kind == 'h')
      acc = acc * torus_element(r, t);
    else
      throw ParseError("unknown factor kind", 0);
  }
  return acc;
}

GroupElement Context::element_from_text(const std::string& text) const {
  WordSpec w = parse_word(text);
  return GroupElement{evaluate_word(w), w};
}

PackedMatrix Context::frobenius(const PackedMatrix& g, const FrobeniusSpec& fr) const {
  PackedMatrix out = g.frobenius_entrywise((unsigned long)fr.q);
  if (fr.twisted) out = tau() * out * tau();
  return out;
}

bool Context::is_frobenius_fixed(const PackedMatrix& g, const FrobeniusSpec& fr) const {
  return frobenius(g, fr) == g;
}

std::vector<std::vector<size_t>> Context::torus_orbits(const std::vector<WordSpec>& variants) const {
  if (field_->degree() != 1)
    throw ValidationError("torus canonicalisation works over prime fields");
  int rank = rs_->rank;
  int units = field_->size() - 1;
  long total = 1;
  for (int i = 0; i < rank; ++i) {
    total *= units;
    if (total > 100000) throw ValidationError("torus enumeration cap exceeded");
  }

  // torus elements as diagonal vectors
  std::vector<std::vector<uint8_t>> diags;
  std::vector<int> digits(size_t(rank), 0);
  for (;;) {
    PackedMatrix h = PackedMatrix::identity(*field_, dim());
    for (int i = 0; i < rank; ++i)
      if (digits[size_t(i)] > 0)
        h = h * torus_element(rs_->simple_root(i), uint8_t(1 + digits[size_t(i)]));
    if (!h.is_diagonal()) throw ValidationError("torus element is not diagonal");
    std::vector<uint8_t> d(static_cast<size_t>(dim()));
    for (int t = 0; t < dim(); ++t) d[size_t(t)] = h.get(t, t);
    diags.push_back(std::move(d));
    int pos = 0;
    while (pos < rank && ++digits[size_t(pos)] == units) {
      digits[size_t(pos)] = 0;
      ++pos;
    }
    if (pos == rank) break;
  }

  // canonical orbit key: smallest conjugate serialisation
  std::vector<std::string> keys;
  for (const auto& w : variants) {
    PackedMatrix v = evaluate_word(w);
    std::string best;
    for (const auto& d : diags) {
      PackedMatrix c(*field_, dim());
      for (int r = 0; r < dim(); ++r)
        for (int cidx = 0; cidx < dim(); ++cidx) {
          uint8_t x = v.get(r, cidx);
          if (x)
            c.set(r, cidx,
                  field_->mul(field_->mul(d[size_t(r)], x), field_->inv(d[size_t(cidx)])));
        }
      std::string s = c.packed_bytes();
      if (best.empty() || s < best) best = std::move(s);
    }
    keys.push_back(std::move(best));
  }
  std::vector<std::vector<size_t>> orbits;
  std::map<std::string, size_t> orbit_of;
  for (size_t i = 0; i < variants.size(); ++i) {
    auto it = orbit_of.find(keys[i]);
    if (it == orbit_of.end()) {
      orbit_of.emplace(keys[i], orbits.size());
      orbits.push_back({i});
    } else {
      orbits[it->second].push_back(i);
    }
  }
  return orbits;
}

bool Context::permutes_root_lines(const PackedMatrix& g) const {
  return root_lines_permuted(rep_->basis, g);
}

std::vector<RootIndex> Context::root_line_permutation(const PackedMatrix& g) const {
  const auto& mb = rep_->basis;
  std::vector<RootIndex> out(size_t(rs_->root_count()), -1);
  for (int col = 0; col < mb.dimension; ++col) {
    int src = mb.basis_root[size_t(col)];
    if (src < 0) continue;
    for (int row = 0; row < mb.dimension; ++row)
      if (g.get(row, col) != 0) {
        int dst = mb.basis_root[size_t(row)];
        if (dst < 0) throw ValidationError("element does not permute root lines");
        if (out[size_t(src)] != -1) throw ValidationError("element does not permute root lines");
        out[size_t(src)] = dst;
      }
  }
  return out;
}

RootIndex Context::root_from_coords(const std::vector<int>& coords) const {
  if (int(coords.size()) != rs_->rank) {
    std::string s;
    for (int c : coords) s += std::to_string(c) + ",";
    throw ParseError("root coordinates of wrong rank: [" + s + "]", 0);
  }
  auto r = rs_->find_root(coords);
  if (!r) {
    std::string s;
    for (int c : coords) s += std::to_string(c) + ",";
    throw ParseError("unknown root [" + s + "]", 0);
  }
  return *r;
}

}  // namespace green::chevgroup
