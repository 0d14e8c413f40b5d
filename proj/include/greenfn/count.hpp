#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "greenfn/chevgroup.hpp"

namespace green::count {

struct FilterSpec {
  enum class Kind { None, Auto, Explicit };
  Kind kind = Kind::None;
  std::vector<weyl::RootIndex> roots;  // for Explicit
};

struct CountJob {
  std::string type;
  int q = 0;
  bool twisted = false;
  std::string u_word;
  int maxlen = 0;
  FilterSpec filter;
  int threads = 1;
  std::string checkpoint_path;  // empty: no checkpointing
  uint64_t chunk_budget = 0;    // stop after this many chunks (0 = run to completion)
};

struct CellResult {
  std::vector<int> word;  // canonical reduced word, 0-based
  Int size;               // q^{l(w)}
  uint64_t fixed = 0;
  uint64_t scanned = 0;
  bool done = false;
};

struct CountReport {
  std::vector<CellResult> cells;
  std::map<int, Int> per_length_fixed;
  Int total_fixed = 0;
  bool complete = false;            // every requested cell finished
  bool covers_whole_group = false;  // complete and maxlen covered all of W: exact Q_1
};

/// Engine context: group realisation plus Frobenius for the job.
struct Engine {
  const chevgroup::Context* ctx = nullptr;
  chevgroup::FrobeniusSpec frobenius;
  int q = 0;

  static Engine make(const std::string& type, int q, bool twisted);
};

/// Set of simple roots in the maximal simple-root x-factor prefix of u.
std::vector<weyl::RootIndex> auto_filter(const chevgroup::Context& ctx,
                                         const chevgroup::WordSpec& u);

/// |Q_{1,w}(u)| for one cell: v runs over U_w^F, counting
/// wdot^-1 v^-1 u v wdot upper triangular.  [from, to) restricts the
/// odometer index range (to = 0 means the full cell).
CellResult count_cell(const Engine& eng, const gfp::PackedMatrix& u, const weyl::WeylElement& w,
                      uint64_t from = 0, uint64_t to = 0);

/// Aggregated lower bound over all (filtered) cells with l(w) <= maxlen.
/// Deterministic for any thread count; resumes from job.checkpoint_path.
CountReport count_upto(const CountJob& job,
                       const std::function<void(size_t, size_t)>& progress = {});

/// Cost prediction: the per-cell sizes the job would enumerate.
std::vector<std::pair<std::vector<int>, Int>> dry_run_cells(const CountJob& job);

/// Exact Q_1(u) by exhausting every cell (split groups, total cosets capped).
Int full_coset_count(const Engine& eng, const gfp::PackedMatrix& u, uint64_t coset_cap = 1000000);

struct UnipotentClass {
  Int size;
  Int centraliser_order;
  std::vector<int> jordan;
  std::string representative_word;
  gfp::PackedMatrix representative;
};

struct GroupCensus {
  Int group_order;
  Int unipotent_count;
  std::vector<UnipotentClass> classes;  // sorted by (size, jordan)
};

/// Enumerates all of G^F via Bruhat cells and classifies its unipotent
/// conjugacy classes (split groups, |G^F| capped).
GroupCensus tiny_group_oracle(const std::string& type, int q, uint64_t order_cap = 100000);

// checkpoint file helpers (format documented in the README)
struct CheckpointData {
  std::string fingerprint;
  std::map<std::string, CellResult> cells;  // keyed by 1-based word text "1,2,3"
};
std::string job_fingerprint(const CountJob& job);
std::string cell_key(const std::vector<int>& word);  // 1-based, comma separated
CheckpointData load_checkpoint(const std::string& path);

}  // namespace green::count
