#include "greenfn/lusztig.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace green::lusztig {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

std::string value_of(const std::string& tok, const std::string& key) {
  if (tok.rfind(key + "=", 0) != 0)
    throw ParseError("expected '" + key + "=...' got '" + tok + "'", 0);
  return tok.substr(key.size() + 1);
}

std::vector<int> parse_word_field(const std::string& txt) {
  std::vector<int> out;
  if (txt == "-") return out;
  std::istringstream ss(txt);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(std::stoi(part) - 1);
  return out;
}

}  // namespace

size_t CharacterTable::char_index(const std::string& label) const {
  std::string l = label;
  auto a = alias.find(l);
  if (a != alias.end()) l = a->second;
  for (size_t i = 0; i < chars.size(); ++i)
    if (chars[i].label == l) return i;
  throw ValidationError("unknown character label '" + label + "'");
}

size_t CharacterTable::class_index(const std::string& label) const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].label == label) return i;
  throw ValidationError("unknown class label '" + label + "'");
}

CharacterTable CharacterTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open character table '" + path + "'");
  CharacterTable ct;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (tok[0] == "type") {
      ct.type = tok.at(1);
    } else if (tok[0] == "class") {
      WeylClass c;
      c.label = tok.at(1);
      c.size = Int(value_of(tok.at(2), "size"));
      c.word = parse_word_field(value_of(tok.at(3), "word"));
      ct.classes.push_back(std::move(c));
    } else if (tok[0] == "char") {
      WeylChar c;
      c.label = tok.at(1);
      c.dim = std::stoi(value_of(tok.at(2), "dim"));
      if (tok.at(3) != "values=") {
        // values= v1 v2 ... (space separated after the key)
        std::string first = value_of(tok.at(3), "values");
        if (!first.empty()) c.values.emplace_back(first);
      }
      for (size_t i = 4; i < tok.size(); ++i) c.values.emplace_back(tok[i]);
      ct.chars.push_back(std::move(c));
    } else if (tok[0] == "alias") {
      ct.alias[tok.at(1)] = tok.at(2);
    } else {
      throw ParseError("unknown record '" + tok[0] + "' in character table", 0);
    }
  }
  return ct;
}

void CharacterTable::validate(const weyl::RootSystem& rs) {
  if (classes.empty() || chars.size() != classes.size())
    throw ValidationError("character table is not square");
  Int order = 0;
  for (const auto& c : classes) order += c.size;

  // row orthogonality
  for (size_t a = 0; a < chars.size(); ++a)
    for (size_t b = a; b < chars.size(); ++b) {
      Int acc = 0;
      for (size_t j = 0; j < classes.size(); ++j)
        acc += classes[j].size * chars[a].values[j] * chars[b].values[j];
      if (acc != (a == b ? order : Int(0)))
        throw ValidationError("row orthogonality fails for " + chars[a].label + ", " +
                              chars[b].label);
    }
  // column orthogonality
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = i; j < classes.size(); ++j) {
      Int acc = 0;
      for (const auto& ch : chars) acc += ch.values[i] * ch.values[j];
      Int expected = (i == j) ? order / classes[i].size : Int(0);
      if (acc != expected)
        throw ValidationError("column orthogonality fails for classes " + classes[i].label +
                              ", " + classes[j].label);
    }
  for (const auto& ch : chars)
    if (Int(ch.dim) != ch.values[class_index_of_identity()])
      throw ValidationError("dim mismatch for " + ch.label);

  // class matching against the enumerated group
  auto cc = weyl::conjugacy_classes(rs);
  if (cc.classes.size() != classes.size())
    throw ValidationError("class count mismatch against the enumerated Weyl group");
  if (Int((unsigned long)cc.elements.size()) != order)
    throw ValidationError("group order mismatch against the enumerated Weyl group");
  std::vector<bool> used(cc.classes.size(), false);
  matched_class_.assign(classes.size(), 0);
  std::unordered_map<size_t, size_t> seen;
  for (size_t i = 0; i < classes.size(); ++i) {
    auto w = weyl::element_from_word(rs, classes[i].word);
    // find the enumerated class containing w
    size_t found = SIZE_MAX;
    for (size_t c = 0; c < cc.classes.size(); ++c) {
      for (uint32_t m : cc.classes[c].members)
        if (cc.elements[m].perm == w.perm) {
          found = c;
          break;
        }
      if (found != SIZE_MAX) break;
    }
    if (found == SIZE_MAX) throw ValidationError("class representative not found in W");
    if (used[found]) throw ValidationError("two table classes map to one W-class");
    used[found] = true;
    if (cc.classes[found].size != classes[i].size)
      throw ValidationError("class size mismatch for " + classes[i].label);
    matched_class_[i] = found;
  }
}

size_t CharacterTable::class_index_of_identity() const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].word.empty()) return i;
  throw ValidationError("no identity class in table");
}

std::vector<Int> CharacterTable::torus_orders_at(const weyl::RootSystem& rs, const Int& q) const {
  std::vector<Int> out;
  for (const auto& c : classes) {
    auto w = weyl::element_from_word(rs, c.word);
    out.push_back(weyl::torus_order(rs, w, q));
  }
  return out;
}

SpringerTable SpringerTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open springer table '" + path + "'");
  SpringerTable st;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (tok[0] != "row") throw ParseError("unknown record '" + tok[0] + "' in springer table", 0);
    SpringerRow r;
    r.char_label = value_of(tok.at(1), "char");
    r.d = std::stoi(value_of(tok.at(2), "d"));
    r.class_label = value_of(tok.at(3), "class");
    r.localsys = value_of(tok.at(4), "localsys");
    r.dim_e = std::stoi(value_of(tok.at(5), "dimE"));
    st.rows.push_back(std::move(r));
  }
  return st;
}

void SpringerTable::validate(const CharacterTable& ct) const {
  if (rows.size() != ct.chars.size())
    throw ValidationError("springer table must cover every character");
  std::map<std::pair<std::string, std::string>, int> pairs;
  std::map<std::string, int> trivial_per_class, d_per_class;
  for (const auto& r : rows) {
    ct.char_index(r.char_label);
    if (++pairs[{r.class_label, r.localsys}] > 1)
      throw ValidationError("(class, local system) pair repeated: " + r.class_label + "," +
                            r.localsys);
    if (r.localsys == "1") trivial_per_class[r.class_label]++;
    auto it = d_per_class.find(r.class_label);
    if (it == d_per_class.end())
      d_per_class[r.class_label] = r.d;
    else if (it->second != r.d)
      throw ValidationError("d not constant on class " + r.class_label);
  }
  for (const auto& [cls, dv] : d_per_class)
    if (trivial_per_class[cls] != 1)
      throw ValidationError("class " + cls + " needs exactly one trivial local system");
}

const SpringerRow& SpringerTable::row_for(const std::string& char_label) const {
  for (const auto& r : rows)
    if (r.char_label == char_label) return r;
  throw ValidationError("no springer row for character " + char_label);
}

OmegaMatrix compute_omega(const CharacterTable& ct, const weyl::RootSystem& rs, const Int& q,
                          const std::vector<int>& d_per_char) {
  const size_t n = ct.chars.size();
  OmegaMatrix om;
  om.q = q;
  for (const auto& ch : ct.chars) om.labels.push_back(ch.label);

  auto pd = weyl::poincare(rs);
  Int group = pd.group_order(q);
  Int worder = pd.group_size;
  auto torus = ct.torus_orders_at(rs, q);
  std::vector<Rat> weight(ct.classes.size());
  for (size_t j = 0; j < ct.classes.size(); ++j) {
    if (group % torus[j] != 0) throw ValidationError("torus order does not divide |G^F|");
    weight[j] = Rat(ct.classes[j].size * (group / torus[j]), worder);
    weight[j].canonicalize();
  }

  om.tilde.assign(n, std::vector<Rat>(n, Rat(0)));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b) {
      Rat acc(0);
      for (size_t j = 0; j < ct.classes.size(); ++j)
        acc += weight[j] * Rat(ct.chars[a].values[j] * ct.chars[b].values[j]);
      om.tilde[a][b] = acc;
      om.tilde[b][a] = acc;
    }

  if (!d_per_char.empty()) {
    if (d_per_char.size() != n) throw ValidationError("d map has wrong size");
    om.scaled.assign(n, std::vector<Rat>(n, Rat(0)));
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) {
        Rat scale(1, pow_int(q, (unsigned long)(d_per_char[a] + d_per_char[b])));
        scale.canonicalize();
        om.scaled[a][b] = om.tilde[a][b] * scale;
      }
  }
  return om;
}

namespace {

// Solve M x = rhs exactly; throws DegenerateLambda when singular.
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs) {
  const size_t n = m.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw DegenerateLambda("degenerate Lambda block: singular recursion system");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    Rat inv = 1 / m[col][col];
    for (auto& x : m[col]) x *= inv;
    rhs[col] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

LSResult ls_solve(const OmegaMatrix& omega, const SpringerTable& springer,
                  const CharacterTable& ct) {
  const size_t n = ct.chars.size();
  if (omega.scaled.empty()) throw ValidationError("ls_solve needs the rescaled omega");
  springer.validate(ct);

  LSResult ls;
  ls.q = omega.q;
  ls.labels = omega.labels;
  ls.d.resize(n);
  ls.block.resize(n);
  for (size_t i = 0; i < n; ++i) {
    const auto& row = springer.row_for(ct.chars[i].label);
    ls.d[i] = row.d;
    ls.block[i] = row.class_label;
  }

  ls.P.assign(n, std::vector<Rat>(n, Rat(0)));
  ls.Lambda.assign(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) ls.P[i][i] = 1;

  // d levels, strictly decreasing
  std::vector<int> levels;
  for (size_t i = 0; i < n; ++i) levels.push_back(ls.d[i]);
  std::sort(levels.rbegin(), levels.rend());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<size_t> processed;
  const auto& om = omega.scaled;

  for (int level : levels) {
    std::vector<size_t> here;
    for (size_t i = 0; i < n; ++i)
      if (ls.d[i] == level) here.push_back(i);

    // columns for this level
    if (!processed.empty()) {
      // M[e'][f] = (P^tr Lambda)_{e',f} over processed indices
      std::vector<std::vector<Rat>> M(processed.size(), std::vector<Rat>(processed.size(), Rat(0)));
      for (size_t a = 0; a < processed.size(); ++a)
        for (size_t b = 0; b < processed.size(); ++b) {
          Rat acc(0);
          for (size_t c = 0; c < processed.size(); ++c)
            acc += ls.P[processed[c]][processed[a]] * ls.Lambda[processed[c]][processed[b]];
          M[a][b] = acc;
        }
      for (size_t e : here) {
        std::vector<Rat> rhs(processed.size());
        for (size_t a = 0; a < processed.size(); ++a) rhs[a] = om[processed[a]][e];
        auto x = solve_linear(M, rhs);
        for (size_t b = 0; b < processed.size(); ++b) ls.P[processed[b]][e] = x[b];
      }
    }

    // Lambda entries for blocks at this level, plus the zero residual
    // for same-level pairs in different blocks
    for (size_t e1 : here)
      for (size_t e2 : here) {
        Rat corr(0);
        for (size_t a : processed)
          for (size_t b : processed) corr += ls.P[a][e1] * ls.Lambda[a][b] * ls.P[b][e2];
        Rat rem = om[e1][e2] - corr;
        if (ls.block[e1] == ls.block[e2]) {
          ls.Lambda[e1][e2] = rem;
        } else if (rem != 0) {
          throw InconsistentData("inconsistent Omega/Springer data: nonzero residual between " +
                                 ls.labels[e1] + " and " + ls.labels[e2]);
        }
      }

    for (size_t e : here) processed.push_back(e);
  }

  // reconstruction check: P^tr Lambda P = Omega, exactly
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      Rat acc(0);
      for (size_t i = 0; i < n; ++i) {
        if (ls.P[i][a] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
          if (ls.Lambda[i][j] == 0) continue;
          acc += ls.P[i][a] * ls.Lambda[i][j] * ls.P[j][b];
        }
      }
      if (acc != om[a][b])
        throw InconsistentData("reconstruction P^tr Lambda P != Omega at (" + ls.labels[a] + "," +
                               ls.labels[b] + ")");
    }
  return ls;
}

std::vector<Int> p_tilde(const LSResult& ls, const CharacterTable& ct) {
  const size_t n = ls.labels.size();
  std::vector<Int> out(n, Int(0));
  for (size_t ep = 0; ep < n; ++ep) {
    Rat acc(0);
    for (size_t e = 0; e < n; ++e)
      acc += Rat(pow_int(ls.q, (unsigned long)ls.d[e]) * Int(ct.chars[e].dim)) * ls.P[ep][e];
    out[ep] = to_int(acc);
  }
  return out;
}

LambdaPrediction lambda_from_class_data(const std::vector<Int>& index,
                                        const std::vector<std::vector<Rat>>& char_values) {
  LambdaPrediction lp;
  const size_t k = char_values.size();
  lp.entries.assign(k, std::vector<Rat>(k, Rat(0)));
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b) {
      Rat acc(0);
      for (size_t i = 0; i < index.size(); ++i)
        acc += Rat(index[i]) * char_values[a][i] * char_values[b][i];
      lp.entries[a][b] = acc;
      if (a != b && acc == 0) lp.degenerate = true;
    }
  return lp;
}

std::vector<std::vector<Poly>> ls_solve_symbolic(const CharacterTable& ct,
                                                 const weyl::RootSystem& rs,
                                                 const SpringerTable& springer,
                                                 const std::vector<Int>& qs) {
  const size_t n = ct.chars.size();
  if (qs.size() < 2) throw ValidationError("need at least two q values");
  std::vector<int> dmap(n);
  for (size_t i = 0; i < n; ++i) dmap[i] = springer.row_for(ct.chars[i].label).d;

  std::vector<LSResult> solved;
  for (const Int& q : qs) {
    auto om = compute_omega(ct, rs, q, dmap);
    solved.push_back(ls_solve(om, springer, ct));
  }
  std::vector<std::vector<Poly>> out(n, std::vector<Poly>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      std::vector<std::pair<Rat, Rat>> pts;
      for (size_t s = 0; s < qs.size(); ++s) pts.emplace_back(Rat(qs[s]), solved[s].P[a][b]);
      Poly p = interpolate(pts);
      if (p.degree() > 2 * rs.positive_count)
        throw ValidationError("interpolated entry exceeds the degree bound");
      out[a][b] = p;
    }
  return out;
}

}  // namespace green::lusztig
