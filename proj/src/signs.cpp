#include "greenfn/signs.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace green::signs {

size_t ComponentGroupTable::class_index(const std::string& label) const {
  for (size_t i = 0; i < class_labels.size(); ++i)
    if (class_labels[i] == label) return i;
  throw ValidationError("unknown A(u)-class '" + label + "' in " + id);
}

size_t ComponentGroupTable::char_index(const std::string& label) const {
  for (size_t i = 0; i < char_labels.size(); ++i)
    if (char_labels[i] == label) return i;
  throw ValidationError("unknown A(u)-character '" + label + "' in " + id);
}

Int ComponentGroupTable::order() const {
  Int o = 0;
  for (const Int& s : class_sizes) o += s;
  return o;
}

namespace {

ComponentGroupTable make_table(const std::string& id, std::vector<std::string> cls,
                               std::vector<long> sizes, std::vector<std::string> chars,
                               std::vector<std::vector<QuadVal>> values) {
  ComponentGroupTable t;
  t.id = id;
  t.class_labels = std::move(cls);
  for (long s : sizes) t.class_sizes.emplace_back(s);
  t.char_labels = std::move(chars);
  t.values = std::move(values);
  // orthogonality
  Int order = t.order();
  for (size_t a = 0; a < t.values.size(); ++a)
    for (size_t b = a; b < t.values.size(); ++b) {
      QuadVal acc;
      for (size_t j = 0; j < t.class_sizes.size(); ++j) {
        QuadVal term = t.values[a][j] * t.values[b][j].conj();
        acc = acc + QuadVal(term.re * Rat(t.class_sizes[j]), term.im * Rat(t.class_sizes[j]));
      }
      QuadVal expect(a == b ? Rat(order) : Rat(0), Rat(0));
      if (!(acc == expect))
        throw ValidationError("orthogonality fails in component group " + id);
    }
  return t;
}

ComponentGroupTable build_group(const std::string& id) {
  QuadVal w(Rat(-1, 2), Rat(1, 2));    // primitive cube root of unity
  QuadVal wb = w.conj();
  if (id == "trivial") return make_table(id, {"1"}, {1}, {"1"}, {{QuadVal(1)}});
  if (id == "Z2")
    return make_table(id, {"1", "g"}, {1, 1}, {"1", "eps"},
                      {{QuadVal(1), QuadVal(1)}, {QuadVal(1), QuadVal(-1)}});
  if (id == "Z3")
    return make_table(id, {"1", "g", "g2"}, {1, 1, 1}, {"1", "omega", "omega2"},
                      {{QuadVal(1), QuadVal(1), QuadVal(1)},
                       {QuadVal(1), w, wb},
                       {QuadVal(1), wb, w}});
  if (id == "S3")
    return make_table(id, {"1", "t", "c3"}, {1, 3, 2}, {"1", "eps", "r2"},
                      {{QuadVal(1), QuadVal(1), QuadVal(1)},
                       {QuadVal(1), QuadVal(-1), QuadVal(1)},
                       {QuadVal(2), QuadVal(0), QuadVal(-1)}});
  if (id == "S4")
    return make_table(id, {"1", "t", "tt", "c3", "c4"}, {1, 6, 3, 8, 6},
                      {"1", "eps", "r2", "r3", "r3eps"},
                      {{QuadVal(1), QuadVal(1), QuadVal(1), QuadVal(1), QuadVal(1)},
                       {QuadVal(1), QuadVal(-1), QuadVal(1), QuadVal(1), QuadVal(-1)},
                       {QuadVal(2), QuadVal(0), QuadVal(2), QuadVal(-1), QuadVal(0)},
                       {QuadVal(3), QuadVal(1), QuadVal(-1), QuadVal(0), QuadVal(-1)},
                       {QuadVal(3), QuadVal(-1), QuadVal(-1), QuadVal(0), QuadVal(1)}});
  if (id == "D8")
    return make_table(id, {"1", "z", "r", "s", "sr"}, {1, 1, 2, 2, 2},
                      {"1", "a", "b", "ab", "r2"},
                      {{QuadVal(1), QuadVal(1), QuadVal(1), QuadVal(1), QuadVal(1)},
                       {QuadVal(1), QuadVal(1), QuadVal(1), QuadVal(-1), QuadVal(-1)},
                       {QuadVal(1), QuadVal(1), QuadVal(-1), QuadVal(1), QuadVal(-1)},
                       {QuadVal(1), QuadVal(1), QuadVal(-1), QuadVal(-1), QuadVal(1)},
                       {QuadVal(2), QuadVal(-2), QuadVal(0), QuadVal(0), QuadVal(0)}});
  if (id == "Z2xS3") {
    // classes (z^i, s3-class); characters are products
    auto s3 = build_group("S3");
    ComponentGroupTable t;
    t.id = id;
    for (int zi = 0; zi < 2; ++zi)
      for (size_t j = 0; j < 3; ++j) {
        t.class_labels.push_back((zi ? "z*" : "") + s3.class_labels[j]);
        t.class_sizes.push_back(s3.class_sizes[j]);
      }
    for (int e = 0; e < 2; ++e)
      for (size_t ch = 0; ch < 3; ++ch) {
        t.char_labels.push_back((e ? "sgn*" : "") + s3.char_labels[ch]);
        std::vector<QuadVal> row;
        for (int zi = 0; zi < 2; ++zi)
          for (size_t j = 0; j < 3; ++j) {
            QuadVal v = s3.values[ch][j];
            if (e && zi) v = QuadVal(-v.re, -v.im);
            row.push_back(v);
          }
        t.values.push_back(std::move(row));
      }
    return make_table(id, t.class_labels, [&] {
      std::vector<long> s;
      for (const Int& x : t.class_sizes) s.push_back(x.get_si());
      return s;
    }(), t.char_labels, t.values);
  }
  if (id == "S5")
    return make_table(
        id, {"1", "t", "tt", "c3", "c3t", "c4", "c5"}, {1, 10, 15, 20, 20, 30, 24},
        {"1", "eps", "r4", "r4eps", "r5", "r5eps", "r6"},
        {{QuadVal(1), QuadVal(1), QuadVal(1), QuadVal(1), QuadVal(1), QuadVal(1), QuadVal(1)},
         {QuadVal(1), QuadVal(-1), QuadVal(1), QuadVal(1), QuadVal(-1), QuadVal(-1), QuadVal(1)},
         {QuadVal(4), QuadVal(2), QuadVal(0), QuadVal(1), QuadVal(-1), QuadVal(0), QuadVal(-1)},
         {QuadVal(4), QuadVal(-2), QuadVal(0), QuadVal(1), QuadVal(1), QuadVal(0), QuadVal(-1)},
         {QuadVal(5), QuadVal(1), QuadVal(1), QuadVal(-1), QuadVal(1), QuadVal(-1), QuadVal(0)},
         {QuadVal(5), QuadVal(-1), QuadVal(1), QuadVal(-1), QuadVal(-1), QuadVal(1), QuadVal(0)},
         {QuadVal(6), QuadVal(0), QuadVal(-2), QuadVal(0), QuadVal(0), QuadVal(0), QuadVal(1)}});
  throw ValidationError("unknown component group id '" + id + "'");
}

}  // namespace

const ComponentGroupTable& component_group(const std::string& id) {
  static std::map<std::string, ComponentGroupTable> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, build_group(id)).first;
  return it->second;
}

std::vector<GFClassData> load_class_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open class data '" + path + "'");
  std::vector<GFClassData> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string tok;
    ss >> tok;
    if (tok == "class") {
      GFClassData cd;
      std::string lbl, dimc, grp;
      ss >> lbl >> dimc >> grp;
      cd.label = lbl;
      if (dimc.rfind("dimC=", 0) != 0 || grp.rfind("A=", 0) != 0)
        throw ParseError("bad class line in " + path, 0);
      cd.dim_centraliser = std::stoi(dimc.substr(5));
      cd.group_id = grp.substr(2);
      out.push_back(std::move(cd));
    } else if (tok == "rep") {
      if (out.empty()) throw ParseError("rep before class in " + path, 0);
      ClassPiece piece;
      std::string rest;
      std::getline(ss, rest);
      // a=<label> cent=<poly> [word="..."]
      auto get_field = [&](const std::string& key) -> std::string {
        auto pos = rest.find(key + "=");
        if (pos == std::string::npos) return "";
        pos += key.size() + 1;
        if (rest[pos] == '"') {
          auto end = rest.find('"', pos + 1);
          return rest.substr(pos + 1, end - pos - 1);
        }
        auto end = rest.find(' ', pos);
        return rest.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
      };
      piece.a_class = get_field("a");
      piece.centraliser = Poly::parse(get_field("cent"));
      piece.word = get_field("word");
      if (piece.a_class.empty()) throw ParseError("rep line missing a= in " + path, 0);
      out.back().pieces.push_back(std::move(piece));
    } else {
      throw ParseError("unknown record '" + tok + "' in class data", 0);
    }
  }
  return out;
}

void validate_class_data(const GFClassData& cd, const Poly& group_order) {
  const auto& A = component_group(cd.group_id);
  if (cd.pieces.size() != A.class_labels.size())
    throw ValidationError("class " + cd.label + ": piece count differs from A(u) class count");
  std::set<std::string> seen;
  for (const auto& p : cd.pieces) {
    A.class_index(p.a_class);
    if (!seen.insert(p.a_class).second)
      throw ValidationError("class " + cd.label + ": duplicate piece " + p.a_class);
    // centraliser order divides |G^F| as a polynomial identity
    group_order.divide_exact(p.centraliser);
  }
}

SignHypothesis pin_trivial_system_signs(const lusztig::LSResult& ls,
                                        const lusztig::SpringerTable& springer,
                                        const lusztig::CharacterTable& ct) {
  SignHypothesis h;
  size_t triv = SIZE_MAX;
  for (size_t e = 0; e < ct.chars.size(); ++e) {
    bool is_trivial_char = true;
    for (const Int& v : ct.chars[e].values)
      if (v != 1) is_trivial_char = false;
    if (is_trivial_char) triv = e;
  }
  if (triv == SIZE_MAX) throw ValidationError("no trivial character in table");
  for (size_t e = 0; e < ct.chars.size(); ++e) {
    const auto& row = springer.row_for(ct.chars[e].label);
    if (row.localsys != "1") continue;
    const Rat& p = ls.P[e][triv];
    if (p == 0) continue;
    if (p != 1 && p != -1)
      throw ValidationError("p_{E0,triv} = " + p.get_str() + " is not a unit at " +
                            ct.chars[e].label);
    h.delta[ct.chars[e].label] = (p == 1) ? 1 : -1;
    h.pinned.insert(ct.chars[e].label);
  }
  return h;
}

std::vector<Int> predict_q1(const ClassPTilde& pt, const GFClassData& cd,
                            const SignHypothesis& h) {
  const auto& A = component_group(cd.group_id);
  std::vector<Int> out;
  for (const auto& piece : cd.pieces) {
    size_t ai = A.class_index(piece.a_class);
    QuadVal acc;
    for (size_t k = 0; k < pt.chars.size(); ++k) {
      auto it = h.delta.find(pt.chars[k]);
      if (it == h.delta.end()) throw ValidationError("unresolved sign for " + pt.chars[k]);
      // local system "1" is A(u)'s trivial character
      size_t chi = A.char_index(pt.localsys[k] == "1" ? A.char_labels[0] : pt.localsys[k]);
      QuadVal tr = A.values[chi][ai];
      QuadVal term(tr.re * Rat(pt.ptilde[k] * it->second), tr.im * Rat(pt.ptilde[k] * it->second));
      acc = acc + term;
    }
    if (acc.im != 0) throw ValidationError("non-rational Q_1 prediction; bad local system data");
    out.push_back(to_int(acc.re));
  }
  return out;
}

ResolveOutcome resolve(const std::vector<ClassPTilde>& classes,
                       const std::vector<GFClassData>& class_data,
                       const std::vector<Observation>& observations,
                       const SignHypothesis& pinned) {
  // the unpinned characters across the involved classes
  std::vector<std::string> free_chars;
  for (const auto& pt : classes)
    for (const auto& ch : pt.chars)
      if (!pinned.delta.count(ch)) free_chars.push_back(ch);
  std::sort(free_chars.begin(), free_chars.end());
  free_chars.erase(std::unique(free_chars.begin(), free_chars.end()), free_chars.end());
  if (free_chars.size() > 20) throw ValidationError("too many unresolved signs");

  auto data_for = [&](const std::string& label) -> const GFClassData& {
    for (const auto& cd : class_data)
      if (cd.label == label) return cd;
    throw ValidationError("no class data for " + label);
  };

  ResolveOutcome out;
  std::map<std::string, std::set<std::string>> chosen_pieces;
  std::vector<std::string> last_violations;

  for (uint64_t mask = 0; mask < (uint64_t(1) << free_chars.size()); ++mask) {
    SignHypothesis h = pinned;
    for (size_t i = 0; i < free_chars.size(); ++i)
      h.delta[free_chars[i]] = (mask >> i) & 1 ? -1 : 1;

    bool ok = true;
    std::vector<std::string> violations;
    std::map<std::string, std::set<std::string>> matches;

    for (const auto& pt : classes) {
      const auto& cd = data_for(pt.class_label);
      auto pred = predict_q1(pt, cd, h);
      for (size_t i = 0; i < pred.size(); ++i)
        if (pred[i] < 0) {
          ok = false;
          violations.push_back("negative Q1 for " + pt.class_label + ":" + cd.pieces[i].a_class);
        }
      for (const auto& obs : observations) {
        if (obs.class_label != pt.class_label) continue;
        if (obs.piece != "?") {
          size_t pi = SIZE_MAX;
          for (size_t i = 0; i < cd.pieces.size(); ++i)
            if (cd.pieces[i].a_class == obs.piece) pi = i;
          if (pi == SIZE_MAX) throw ValidationError("observation names unknown piece " + obs.piece);
          bool match = obs.exact ? pred[pi] == obs.value : pred[pi] >= obs.value;
          if (!match) {
            ok = false;
            violations.push_back((obs.exact ? "exact" : "bound") + std::string(" observation at ") +
                                 obs.class_label + ":" + obs.piece + " value " +
                                 obs.value.get_str());
          }
        } else {
          std::set<std::string> fits;
          for (size_t i = 0; i < cd.pieces.size(); ++i) {
            bool match = obs.exact ? pred[i] == obs.value : pred[i] >= obs.value;
            if (match) fits.insert(cd.pieces[i].a_class);
          }
          if (fits.empty()) {
            ok = false;
            violations.push_back("no piece of " + obs.class_label + " matches " +
                                 obs.value.get_str());
          } else {
            matches["?" + obs.class_label + (obs.exact ? "=" : ">=") + obs.value.get_str()] = fits;
          }
        }
      }
    }
    if (ok) {
      out.consistent.push_back(h);
      for (auto& [k, v] : matches) chosen_pieces[k].insert(v.begin(), v.end());
    } else {
      last_violations = violations;
    }
  }
  std::sort(out.consistent.begin(), out.consistent.end());
  out.identified_pieces = std::move(chosen_pieces);
  if (out.consistent.empty()) out.violations = last_violations;
  return out;
}

SignHypothesis power_lift(const SignHypothesis& base, int m,
                          const std::set<std::string>& m_independent) {
  if (m < 1) throw ValidationError("m must be positive");
  SignHypothesis out = base;
  for (auto& [ch, d] : out.delta) {
    if (m_independent.count(ch)) continue;
    d = (m % 2 == 0) ? 1 : d;
  }
  return out;
}

std::vector<GreenRow> assemble_green_restrictions(
    const lusztig::LSResult& ls, const lusztig::CharacterTable& ct,
    const lusztig::SpringerTable& springer, const SignHypothesis& signs,
    const std::vector<GFClassData>& class_data, const weyl::WeylElement& w,
    const weyl::RootSystem& rs) {
  // locate the conjugacy class of w in the table
  auto cc = weyl::conjugacy_classes(rs);
  size_t wclass = SIZE_MAX;
  {
    // find w in the enumeration, then its class
    for (size_t c = 0; c < cc.classes.size() && wclass == SIZE_MAX; ++c)
      for (uint32_t m : cc.classes[c].members)
        if (cc.elements[m].perm == w.perm) {
          wclass = c;
          break;
        }
    if (wclass == SIZE_MAX) throw ValidationError("w not found in W");
  }
  // map to the table's class order via representative words
  size_t table_class = SIZE_MAX;
  for (size_t i = 0; i < ct.classes.size(); ++i) {
    auto rep = weyl::element_from_word(rs, ct.classes[i].word);
    if (cc.class_of[0] == 0) {  // noop guard
    }
    // find rep's class
    for (size_t c = 0; c < cc.classes.size(); ++c) {
      bool in_c = false;
      for (uint32_t m : cc.classes[c].members)
        if (cc.elements[m].perm == rep.perm) in_c = true;
      if (in_c && c == wclass) {
        table_class = i;
        break;
      }
    }
    if (table_class != SIZE_MAX) break;
  }
  if (table_class == SIZE_MAX) throw ValidationError("class of w missing from the table");

  std::vector<GreenRow> rows;
  for (const auto& cd : class_data) {
    const auto& A = component_group(cd.group_id);
    for (const auto& piece : cd.pieces) {
      size_t ai = A.class_index(piece.a_class);
      QuadVal acc;
      for (size_t e = 0; e < ct.chars.size(); ++e) {
        const auto& row = springer.row_for(ct.chars[e].label);
        Int chi_w = ct.chars[e].values[table_class];
        if (chi_w == 0) continue;
        // inner sum over E' supported on this class
        for (size_t ep = 0; ep < ct.chars.size(); ++ep) {
          const auto& rowp = springer.row_for(ct.chars[ep].label);
          if (rowp.class_label != cd.label) continue;
          if (ls.P[ep][e] == 0) continue;
          auto it = signs.delta.find(ct.chars[ep].label);
          if (it == signs.delta.end())
            throw ValidationError("unresolved sign " + ct.chars[ep].label);
          size_t chi = A.char_index(rowp.localsys == "1" ? A.char_labels[0] : rowp.localsys);
          QuadVal tr = A.values[chi][ai];
          Rat coef = Rat(chi_w * pow_int(ls.q, (unsigned long)row.d) * Int(it->second)) * ls.P[ep][e];
          acc = acc + QuadVal(tr.re * coef, tr.im * coef);
        }
      }
      if (acc.im != 0) throw ValidationError("non-rational Green value");
      rows.push_back({cd.label, piece.a_class, to_int(acc.re)});
    }
  }
  return rows;
}

}  // namespace green::signs
