#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "greenfn/lusztig.hpp"

namespace green::signs {

/// Value in Q(sqrt(-3)): re + im * sqrt(-3).  Only Z/3 and Z/6 component
/// groups have non-rational character values; everywhere else im = 0.
struct QuadVal {
  Rat re, im;
  QuadVal(long r = 0) : re(r), im(0) {}
  QuadVal(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  QuadVal operator*(const QuadVal& o) const {
    return QuadVal(re * o.re - 3 * im * o.im, re * o.im + im * o.re);
  }
  QuadVal operator+(const QuadVal& o) const { return QuadVal(re + o.re, im + o.im); }
  QuadVal conj() const { return QuadVal(re, -im); }
  bool operator==(const QuadVal& o) const { return re == o.re && im == o.im; }
};

/// Built-in character tables of the small component groups A(u).
struct ComponentGroupTable {
  std::string id;
  std::vector<std::string> class_labels;
  std::vector<Int> class_sizes;
  std::vector<std::string> char_labels;
  std::vector<std::vector<QuadVal>> values;  // values[ch][cl]

  size_t class_index(const std::string& label) const;
  size_t char_index(const std::string& label) const;
  Int order() const;
};

/// ids: trivial, Z2, Z3, S3, S4, D8, Z2xS3, S5
const ComponentGroupTable& component_group(const std::string& id);

/// Per-class record: the A(u)-pieces of C^F with centraliser orders.
struct ClassPiece {
  std::string a_class;     // conjugacy class of A(u)
  Poly centraliser;        // |C_G(u_i)^F| as a polynomial in q
  std::string word;        // representative word, may be empty
};

struct GFClassData {
  std::string label;       // unipotent class label
  int dim_centraliser = 0; // dim C_G(u)
  std::string group_id;    // A(u)
  std::vector<ClassPiece> pieces;
};

/// File: `class <label> dimC=<n> A=<groupid>` followed by
/// `rep a=<A-class> cent=<poly> [word="<wordspec>"]` lines.
std::vector<GFClassData> load_class_data(const std::string& path);
void validate_class_data(const GFClassData& cd, const Poly& group_order);

struct SignHypothesis {
  std::map<std::string, int> delta;      // char label -> +-1
  std::set<std::string> pinned;          // immutable entries
  bool operator<(const SignHypothesis& o) const { return delta < o.delta; }
  bool operator==(const SignHypothesis& o) const { return delta == o.delta; }
};

/// delta_{E0} = 1/p_{E0, triv} for trivial-local-system rows with a nonzero
/// entry in the trivial character's column.
SignHypothesis pin_trivial_system_signs(const lusztig::LSResult& ls,
                                        const lusztig::SpringerTable& springer,
                                        const lusztig::CharacterTable& ct);

/// The p-tilde data restricted to one class: labels, coefficients, the
/// attached A(u)-character per label (from the Springer local systems).
struct ClassPTilde {
  std::string class_label;
  std::vector<std::string> chars;     // characters of W supported on the class
  std::vector<Int> ptilde;            // their Q_1 coefficients at the working q
  std::vector<std::string> localsys;  // A(u)-character labels, "1" = trivial
};

/// Q_1(u_i) for every piece, under the hypothesis.  All predictions must be
/// rational integers; a nonvanishing sqrt(-3)-part is a data error.
std::vector<Int> predict_q1(const ClassPTilde& pt, const GFClassData& cd,
                            const SignHypothesis& h);

struct Observation {
  std::string class_label;
  std::string piece;   // A(u)-class label, or "?" when the piece is unknown
  bool exact = true;   // otherwise a lower bound
  Int value;
};

struct ResolveOutcome {
  std::vector<SignHypothesis> consistent;  // all surviving hypotheses
  // per untagged observation: the pieces it can match in any survivor
  std::map<std::string, std::set<std::string>> identified_pieces;
  std::vector<std::string> violations;     // populated when `consistent` is empty
};

/// Enumerates every +-1 assignment for the unpinned characters of the given
/// classes and keeps those matching all observations and Q_1(u_i) >= 0.
ResolveOutcome resolve(const std::vector<ClassPTilde>& classes,
                       const std::vector<GFClassData>& class_data,
                       const std::vector<Observation>& observations,
                       const SignHypothesis& pinned);

/// delta at q = p^m from the base signs: delta = (delta^#)^m; characters in
/// m_independent keep their base sign for every m.
SignHypothesis power_lift(const SignHypothesis& base, int m,
                          const std::set<std::string>& m_independent = {});

/// Green-function restrictions: Q_w(u_i) over the pieces of the given classes.
struct GreenRow {
  std::string class_label;
  std::string piece;
  Int value;
};
std::vector<GreenRow> assemble_green_restrictions(
    const lusztig::LSResult& ls, const lusztig::CharacterTable& ct,
    const lusztig::SpringerTable& springer, const SignHypothesis& signs,
    const std::vector<GFClassData>& class_data, const weyl::WeylElement& w,
    const weyl::RootSystem& rs);

}  // namespace green::signs
