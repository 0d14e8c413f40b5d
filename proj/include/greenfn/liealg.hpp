#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "greenfn/weyl.hpp"

namespace green::liealg {

/// Sparse integer matrix, row-indexed adjacency lists kept sorted by column.
class SpMat {
 public:
  SpMat() = default;
  explicit SpMat(int n) : n_(n), rows_(size_t(n)) {}

  int size() const { return n_; }
  void add(int r, int c, long long v);
  long long get(int r, int c) const;
  const std::vector<std::pair<int, long long>>& row(int r) const { return rows_[size_t(r)]; }

  SpMat operator*(const SpMat& o) const;
  SpMat operator+(const SpMat& o) const;
  SpMat operator-(const SpMat& o) const;
  SpMat scaled(long long f) const;
  /// Divides every entry exactly; throws ValidationError on nonzero remainder.
  SpMat divided_exact(long long f) const;
  SpMat bracket(const SpMat& o) const { return *this * o - o * *this; }

  bool operator==(const SpMat& o) const { return n_ == o.n_ && rows_ == o.rows_; }
  bool is_zero() const;
  size_t nonzero_count() const;

 private:
  int n_ = 0;
  std::vector<std::vector<std::pair<int, long long>>> rows_;
};

/// Basis of the module M: v_alpha for positive roots by decreasing height,
/// then the Cartan labels u_i, then v_alpha for negative roots by decreasing
/// (signed) height.  Root elements of positive roots become upper triangular
/// in this order.
struct ModuleBasis {
  int dimension = 0;
  std::vector<int> basis_root;   // per position: root index, or -1 for Cartan labels
  std::vector<int> basis_cartan; // per position: Cartan index i, or -1
  std::vector<int> pos_of_root;  // root index -> position
  std::vector<int> pos_of_cartan;
};

ModuleBasis module_basis(const weyl::RootSystem& rs);

struct AdjointRep {
  const weyl::RootSystem* rs = nullptr;
  ModuleBasis basis;
  std::vector<SpMat> e, f, h;     // per simple root
  std::vector<SpMat> canonical;   // per root, e_alpha^eps; empty until computed
  std::vector<int> epsilon;       // the sign function used for `canonical`
};

/// Lusztig's operators on the (|I|+|Phi|)-dimensional module.
AdjointRep build_operators(const weyl::RootSystem& rs);

struct RelationReport {
  bool cartan_commute = false;      // [h_i, h_j] = 0
  bool weights = false;             // [h_i, e_j] = a_ij e_j, [h_i, f_j] = -a_ij f_j
  bool opposite_pairs = false;      // [e_i, f_j] = 0 for i != j
  bool serre = false;               // ad(e_i)^{1-a_ij}(e_j) = 0 and dually
  bool span_dimension = false;      // bracket closure has dimension |I| + |Phi|
  int dimension = 0;
  std::vector<std::string> failures;
  bool all() const {
    return cartan_commute && weights && opposite_pairs && serre && span_dimension;
  }
};

RelationReport verify_chevalley_relations(const AdjointRep& rep);

/// The unique Chevalley basis normalised by epsilon.  Fills rep.canonical.
/// pivot_largest flips the recursion pivot; the result must not change.
void canonical_basis(AdjointRep& rep, const std::vector<int>& epsilon, bool pivot_largest = false);

/// N_{alpha,beta} with [e_a, e_b] = N e_{a+b}; requires alpha+beta to be a root.
long long structure_constant(const AdjointRep& rep, int alpha, int beta);

}  // namespace green::liealg
