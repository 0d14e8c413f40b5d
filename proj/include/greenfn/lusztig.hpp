#pragma once

#include <map>
#include <string>
#include <vector>

#include "greenfn/numeric.hpp"
#include "greenfn/weyl.hpp"

namespace green::lusztig {

struct WeylClass {
  std::string label;
  Int size;
  std::vector<int> word;  // representative, 0-based generator indices
};

struct WeylChar {
  std::string label;
  int dim = 0;
  std::vector<Int> values;  // per class, table order
};

/// Character table of W, loaded from a data file and validated against both
/// orthogonality relations and the enumerated conjugacy classes.
struct CharacterTable {
  std::string type;
  std::vector<WeylClass> classes;
  std::vector<WeylChar> chars;
  std::map<std::string, std::string> alias;  // alternative label -> table label

  size_t char_index(const std::string& label) const;
  size_t class_index(const std::string& label) const;
  size_t class_index_of_identity() const;

  static CharacterTable load(const std::string& path);
  /// orthogonality + class matching against the enumerated Weyl group
  void validate(const weyl::RootSystem& rs);

  std::vector<Int> torus_orders_at(const weyl::RootSystem& rs, const Int& q) const;

 private:
  std::vector<size_t> matched_class_;  // table class -> enumerated class
};

struct SpringerRow {
  std::string char_label;
  int d = 0;
  std::string class_label;
  std::string localsys;  // "1" marks the trivial local system
  int dim_e = 0;
};

struct SpringerTable {
  std::vector<SpringerRow> rows;
  static SpringerTable load(const std::string& path);
  void validate(const CharacterTable& ct) const;
  const SpringerRow& row_for(const std::string& char_label) const;
};

struct OmegaMatrix {
  std::vector<std::string> labels;              // char labels, table order
  std::vector<std::vector<Rat>> tilde;          // omega-tilde
  std::vector<std::vector<Rat>> scaled;         // omega = q^{-d-d'} omega-tilde
  Int q;
};

/// omega-tilde from character data and torus orders; the scaled variant
/// additionally needs the d-function from the Springer table.
OmegaMatrix compute_omega(const CharacterTable& ct, const weyl::RootSystem& rs, const Int& q,
                          const std::vector<int>& d_per_char);

struct LSResult {
  std::vector<std::string> labels;
  std::vector<int> d;                       // per char
  std::vector<std::string> block;           // class label per char
  std::vector<std::vector<Rat>> P;          // p_{E',E}, unitriangular
  std::vector<std::vector<Rat>> Lambda;     // block diagonal
  Int q;
};

struct DegenerateLambda : ValidationError {
  using ValidationError::ValidationError;
};
struct InconsistentData : ValidationError {
  using ValidationError::ValidationError;
};

/// The Lusztig-Shoji recursion: solves P^tr Lambda P = Omega under the
/// support conditions (P unitriangular along decreasing d, Lambda supported
/// on blocks).  Exact rational arithmetic; verifies the reconstruction.
LSResult ls_solve(const OmegaMatrix& omega, const SpringerTable& springer,
                  const CharacterTable& ct);

/// p-tilde coefficients of Q_1: p~_{E'} = sum_E q^{d_E} dim(E) p_{E',E}.
std::vector<Int> p_tilde(const LSResult& ls, const CharacterTable& ct);

/// Per-block lambda predicted from class data: entries
/// sum_i index_i * chi'(a_i) * chi(a_i) with index_i = [G^F : C_G(u_i)^F].
/// Returns the matrix over the block's characters along with a degeneracy
/// flag (an off-diagonal zero witnesses the lambda = 0 case).
struct LambdaPrediction {
  std::vector<std::vector<Rat>> entries;
  bool degenerate = false;
};
LambdaPrediction lambda_from_class_data(const std::vector<Int>& index,
                                        const std::vector<std::vector<Rat>>& char_values);

/// Solves at several q and interpolates every entry of P (degree bound 2N).
std::vector<std::vector<Poly>> ls_solve_symbolic(const CharacterTable& ct,
                                                 const weyl::RootSystem& rs,
                                                 const SpringerTable& springer,
                                                 const std::vector<Int>& qs);

}  // namespace green::lusztig
