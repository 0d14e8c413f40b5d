#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "greenfn/gfp.hpp"
#include "greenfn/liealg.hpp"
#include "greenfn/weyl.hpp"

namespace green::chevgroup {

/// One factor of a representative word: x[coords](t), h[coords](t) or n[coords](t).
/// Scalars are lo + hi*z (hi = 0 over prime fields).
struct WordFactor {
  char kind = 'x';
  std::vector<int> coords;
  long lo = 0, hi = 0;
};

struct WordSpec {
  std::vector<WordFactor> factors;
};

WordSpec parse_word(const std::string& text);
std::string print_word(const WordSpec& w);

struct GroupElement {
  gfp::PackedMatrix matrix;
  std::optional<WordSpec> provenance;
};

struct FrobeniusSpec {
  int q = 0;          // p^m
  bool twisted = false;
};

/// Immutable per-(type, field) context: root system, adjoint representation
/// with the canonical Chevalley basis, exponential layers for root elements,
/// and the graph-automorphism data when the diagram has a symmetry.
class Context {
 public:
  static const Context& get(const std::string& label, int p, int k);

  const weyl::RootSystem& roots() const { return *rs_; }
  const liealg::AdjointRep& rep() const { return *rep_; }
  const gfp::FieldSpec& field() const { return *field_; }
  int dim() const { return rep_->basis.dimension; }
  bool has_graph_symmetry() const { return !tau_root_perm_.empty(); }
  const std::vector<weyl::RootIndex>& tau_roots() const { return tau_root_perm_; }
  const gfp::PackedMatrix& tau() const;

  gfp::PackedMatrix root_element(weyl::RootIndex alpha, uint8_t t) const;
  gfp::PackedMatrix weyl_rep(weyl::RootIndex alpha, uint8_t t) const;   // n_alpha(t), t != 0
  gfp::PackedMatrix torus_element(weyl::RootIndex alpha, uint8_t t) const;  // h_alpha(t), t != 0
  /// product of n_{alpha_i}(1) along the canonical reduced word
  gfp::PackedMatrix wdot(const weyl::WeylElement& w) const;
  /// F-fixed representative for gamma-fixed w in the twisted group; searches
  /// a torus correction when the plain product is not F-fixed
  gfp::PackedMatrix wdot_twisted(const weyl::WeylElement& w, const FrobeniusSpec& fr) const;

  gfp::PackedMatrix evaluate_word(const WordSpec& w) const;
  GroupElement element_from_text(const std::string& text) const;

  gfp::PackedMatrix frobenius(const gfp::PackedMatrix& g, const FrobeniusSpec& fr) const;
  bool is_frobenius_fixed(const gfp::PackedMatrix& g, const FrobeniusSpec& fr) const;

  /// Orbit partition of word variants under conjugation by T_0^{F_p};
  /// returns one vector of variant indices per orbit (prime fields only).
  std::vector<std::vector<size_t>> torus_orbits(const std::vector<WordSpec>& variants) const;

  weyl::RootIndex root_from_coords(const std::vector<int>& coords) const;

  /// n-like elements permute the v_alpha lines (the Cartan block is the
  /// reflection matrix, so full monomiality only holds on root positions)
  bool permutes_root_lines(const gfp::PackedMatrix& g) const;
  /// root-line permutation extracted from such an element
  std::vector<weyl::RootIndex> root_line_permutation(const gfp::PackedMatrix& g) const;

  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

 private:
  Context(const std::string& label, int p, int k);

  std::unique_ptr<weyl::RootSystem> rs_;
  std::unique_ptr<liealg::AdjointRep> rep_;
  const gfp::FieldSpec* field_ = nullptr;
  std::vector<std::vector<gfp::PackedMatrix>> layers_;  // per root: reduced X^j/j!
  std::vector<int> nsign_;
  std::vector<weyl::RootIndex> tau_root_perm_;
  std::unique_ptr<gfp::PackedMatrix> tau_;
};

}  // namespace green::chevgroup
