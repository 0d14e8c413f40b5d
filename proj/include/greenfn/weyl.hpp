#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "greenfn/numeric.hpp"

namespace green::weyl {

/// Cartan matrix plus the sign function on the Dynkin diagram.
/// Simple roots are indexed 0..rank-1 internally; user-facing labels are 1-based.
struct CartanDatum {
  std::string label;                   // e.g. "F4", "E6", "B3"
  int rank = 0;
  std::vector<std::vector<int>> a;     // a[i][j], a_ii = 2
  std::vector<int> epsilon;            // +1 / -1, epsilon(i) = -epsilon(j) on edges
};

/// Builds the Cartan datum for A_n, B_n (n>=2), C_n (n>=2), D_n (n>=4),
/// G_2, F_4, E_6, E_7, E_8.  Throws ParseError on unknown labels.
CartanDatum build_cartan(const std::string& label);

using RootIndex = int;

struct RootSystem {
  CartanDatum cartan;
  int rank = 0;
  int positive_count = 0;                      // N
  std::vector<std::vector<int>> roots;         // coordinates in the simple-root basis;
                                               // [0,N) positive sorted by (height, lex),
                                               // [N,2N) their negatives in the same order
  std::vector<int> height;                     // per root, signed
  std::vector<std::vector<RootIndex>> reflection;  // reflection[i][r] = index of s_i(r)
  std::vector<RootIndex> simple_index;         // simple_index[i] = index of alpha_i

  int root_count() const { return int(roots.size()); }
  RootIndex negative_of(RootIndex r) const {
    return r < positive_count ? r + positive_count : r - positive_count;
  }
  bool is_positive(RootIndex r) const { return r < positive_count; }
  RootIndex simple_root(int i) const;                       // index of alpha_i
  std::optional<RootIndex> find_root(const std::vector<int>& coords) const;

  /// alpha-string through beta: p = max{ i : beta + i*alpha in Phi },
  /// q = max{ i : beta - i*alpha in Phi }.  Requires alpha != +-beta.
  int string_p(RootIndex alpha, RootIndex beta) const;
  int string_q(RootIndex alpha, RootIndex beta) const;
};

RootSystem generate_roots(const CartanDatum& cd);

/// Element of W stored as a permutation of root indices together with the
/// lexicographically smallest reduced word (0-based generator indices).
struct WeylElement {
  std::vector<uint16_t> perm;   // perm[r] = index of w(root_r)
  std::vector<int> word;
  int length = 0;

  bool operator==(const WeylElement& o) const { return perm == o.perm; }
};

WeylElement identity_element(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, int i);
WeylElement multiply(const RootSystem& rs, const WeylElement& x, const WeylElement& y);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);

/// Phi_w^+ = { alpha in Phi^+ : w(alpha) in Phi^- } in root order.
std::vector<RootIndex> inversion_set(const RootSystem& rs, const WeylElement& w);

/// Applies a reduced word (0-based indices) to the identity.
WeylElement element_from_word(const RootSystem& rs, const std::vector<int>& word);

struct EnumerationOptions {
  std::optional<std::vector<RootIndex>> keep_positive;  // filter: w(alpha) in Phi^+ for all alpha in S
  size_t element_cap = 80u * 1000u * 1000u;             // memory guard
};

/// All w with l(w) <= maxlen (maxlen < 0 means no bound), canonical
/// (length, lex word) order, each with its lex-smallest reduced word.
/// Throws ValidationError naming the completed length when the cap is hit.
std::vector<WeylElement> enumerate_by_length(const RootSystem& rs, int maxlen,
                                             const EnumerationOptions& opts = {});

struct PoincareData {
  std::vector<Int> coefficients;  // count of elements per length
  std::vector<int> degrees;       // d_1 <= ... <= d_r
  int positive_count = 0;
  Int group_size;                 // |W|

  Int weyl_sum_q(const Int& q) const;         // sum_w q^{l(w)}
  Int group_order(const Int& q) const;        // q^N * prod(q^{d_i}-1)
  Poly group_order_poly() const;
};

/// Degrees via factorisation of sum_w t^{l(w)} into prod (t^{d_i}-1)/(t-1).
/// For E7/E8 the classical degree lists are used and coefficients are
/// reconstructed from them instead of a full enumeration.
PoincareData poincare(const RootSystem& rs);

struct ConjugacyClass {
  WeylElement representative;   // minimal (length, word) member
  Int size;
  std::vector<uint32_t> members;  // indices into the enumeration order
};

struct ConjugacyClasses {
  std::vector<WeylElement> elements;        // full group, canonical order
  std::vector<ConjugacyClass> classes;      // sorted by representative order
  std::vector<uint32_t> class_of;           // element index -> class index
};

ConjugacyClasses conjugacy_classes(const RootSystem& rs, size_t cap = 4000000);

/// |T_w^F| = |det(q*id - w)| on the reflection representation (split form).
Int torus_order(const RootSystem& rs, const WeylElement& w, const Int& q);

/// Root-index involution induced by a diagram symmetry given on simple roots
/// (identity entries allowed).  Used for twisted E6: 1<->6, 3<->5.
std::vector<RootIndex> diagram_involution(const RootSystem& rs, const std::vector<int>& simple_map);

}  // namespace green::weyl
