#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "flagrec/complex.hpp"
#include "flagrec/graph.hpp"
#include "flagrec/verify.hpp"

namespace flagrec {

// Which dominated-vertex selection strategy drives the peel loop. The Helly
// and Systolic2D selectors are deterministic; the backtracking kinds branch
// over all farthest candidates and validate at the leaves.
enum class SelectorKind { Helly, Systolic2D, SystolicBacktracking, WeaklySystolicBacktracking };

const char* selector_kind_name(SelectorKind kind);
std::optional<SelectorKind> selector_kind_from_name(std::string_view name);

// One removed vertex with the closed data the rebuild consumes: its neighbor
// set at removal time, and either the member that covered it or the fresh
// vertex introduced as its dominator.
struct PeelRecord {
  enum class Step { DropCovered, IntroduceDominator };
  std::string removed;
  std::vector<std::string> neighbors;
  Step step;
  std::string partner;
};

// The evolving reconstruction front: a vertex set S known to contain the
// residual boundary, its distance matrix, the fixed base vertex, and the
// append-only peel log.
class PeelState {
 public:
  static PeelState from_instance(const BoundaryInstance& instance);

  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<std::string>& members() const { return members_; }
  const std::string& base() const { return base_; }
  bool contains(std::string_view label) const;
  int dist(std::string_view a, std::string_view b) const;
  // Members at distance exactly 1 from u.
  std::vector<std::string> member_neighbors(std::string_view u) const;
  // Sum of all matrix entries; strictly decreases at every peel step.
  long long distance_sum() const;
  const std::vector<PeelRecord>& log() const { return log_; }
  int fresh_count() const { return fresh_; }

 private:
  friend PeelState peel_covered(const PeelState&, std::string_view, std::string_view);
  friend PeelState peel_introduce(const PeelState&, std::string_view);

  int position_of(std::string_view label) const;

  std::vector<std::string> members_;  // sorted
  std::vector<std::vector<int>> dist_;
  std::map<std::string, int> position_;
  std::string base_;
  int fresh_ = 0;
  std::vector<PeelRecord> log_;
};

struct StepDecision {
  PeelRecord::Step step;
  std::string cover;  // set for DropCovered
};

// DropCovered with the smallest member adjacent to u whose closed
// neighborhood covers N[u] within S; IntroduceDominator when none exists.
StepDecision classify_step(const PeelState& state, std::string_view u);

PeelState peel_covered(const PeelState& state, std::string_view u, std::string_view cover);

// Removes u and introduces a fresh vertex standing for u's hidden dominator,
// deriving its distance row from u's. Throws InconsistentMatrix when the
// derived row breaks the metric, which flags a bad input or a wrong branch.
PeelState peel_introduce(const PeelState& state, std::string_view u);

// Smallest member at maximum distance from the base vertex.
std::string select_dominated_helly(const PeelState& state);

// The sphere-walk selector for triangle-complex (K4-free) inputs: fixes the
// base vertex, walks the farthest sphere from a probe root, and counts for
// each visited vertex its sphere neighbors lying farther from the probe.
// A vertex whose count reaches zero is guaranteed dominated.
class SphereSearchState {
 public:
  explicit SphereSearchState(const PeelState& initial);

  std::string select(const PeelState& state);
  // Must be called with the state *before* u was peeled.
  void notify_peeled(const PeelState& before, const std::string& u);

  // Vertices BFS-processed more than once across the run. Stays zero on
  // genuine 2-dimensional systolic inputs; tests treat nonzero as failure.
  long long reprocessed() const { return reprocessed_; }

 private:
  void start_round(const PeelState& state);
  void process_next(const PeelState& state);
  std::vector<std::string> sphere_neighbors(const PeelState& state, const std::string& u) const;

  std::string base_;
  int max_dist_ = -1;
  std::string probe_;
  std::map<std::string, int> farther_count_;
  std::set<std::string> visited_round_;
  std::set<std::string> visited_ever_;
  std::set<std::string> queued_;
  std::deque<std::string> queue_;
  std::set<std::string> ready_;
  long long reprocessed_ = 0;
};

std::string select_dominated_systolic2d(const PeelState& state, SphereSearchState& search);

// Replays the log backwards from the final vertex, re-adding each removed
// vertex with edges to its recorded neighbors. Throws DanglingNeighbor if a
// recorded neighbor was never materialized.
Graph rebuild(const std::vector<PeelRecord>& log, const std::string& final_vertex);

struct ReconstructionStats {
  long long steps = 0;
  long long backtracks = 0;
  double elapsed_ms = 0.0;
  long long sphere_reprocessed = 0;
};

struct ReconstructionResult {
  Graph graph;
  std::vector<std::string> interior_labels;
  std::vector<PeelRecord> log;
  std::string final_vertex;
  ReconstructionStats stats;
};

// Upper bound on the vertex count of any complex realizing the instance: the
// sum of all matrix entries (at least 1).
long long vertex_budget(const BoundaryInstance& instance);

// Reconstructs a graph whose clique complex has the given boundary instance.
// Deterministic for Helly/Systolic2D; bounded backtracking otherwise. Throws
// NotReconstructible when no graph of the requested class realizes the input.
ReconstructionResult reconstruct(const BoundaryInstance& instance, SelectorKind kind);

struct ValidationReport {
  bool class_ok = false;
  bool boundary_ok = false;
  bool distance_ok = false;
  std::string detail;
  bool ok() const { return class_ok && boundary_ok && distance_ok; }
};

ValidationReport validate_reconstruction(const ReconstructionResult& result,
                                         const BoundaryInstance& instance, SelectorKind kind);

// Extends a distance-preserving boundary bijection to a full isomorphism
// between the graphs, or returns empty if none exists.
std::optional<std::map<std::string, std::string>> iso_fixing_boundary(
    const Graph& left, const Graph& right, const std::map<std::string, std::string>& boundary_map);

}  // namespace flagrec
