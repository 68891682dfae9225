#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "idp/graph.hpp"
#include "idp/instance.hpp"
#include "idp/solution.hpp"

namespace idp {

// A vertex of the auxiliary graph H: a candidate path for pair `color`,
// running from -> witness... -> to, whose inner vertices cover `span`.
struct Candidate {
  int color = 0;
  Span span;
  Vertex from = kNoVertex;
  Vertex to = kNoVertex;
  std::vector<Vertex> witness;
  char source = '?';  // '3', 'a', 'b' or 'c'
};

// A surviving pair after ordering: u is its representative met first when
// scanning left to right (clockwise on a circle), v the other one.
struct OrientedPair {
  int pair = 0;
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;
};

// Mutable state shared by the pipeline steps. Vertices are only ever
// deleted; ids and endpoints stay stable.
class WorkingState {
 public:
  explicit WorkingState(const Instance& inst);

  const Instance& instance() const { return *inst_; }
  const Representation& rep() const { return inst_->rep; }
  const Adjacency& adjacency() const { return adj_; }
  const EndpointIndex& endpoints() const { return ends_; }
  int points() const { return inst_->rep.points(); }

  bool live(Vertex v) const { return live_[v] != 0; }
  void kill(Vertex v) { live_[v] = 0; }
  const std::vector<char>& live_flags() const { return live_; }

  // Represents some terminal of the input instance.
  bool is_terminal_vertex(Vertex v) const { return terminal_[v] != 0; }
  // Live non-terminal: the only vertices a path may use as inner vertices.
  bool usable(Vertex v) const { return live_[v] && !terminal_[v]; }

  bool active(int pair) const { return active_[pair] != 0; }
  int active_count() const;
  std::vector<int> active_pairs() const;
  // Moves a pair out of T, committing its terminal path.
  void commit_terminal_path(int pair);
  bool has_committed(int pair) const { return committed_[pair] != 0; }
  int quota(int pair) const;

  const std::vector<PairPath>& committed_paths() const { return committed_paths_; }
  std::vector<Candidate>& candidates() { return candidates_; }
  const std::vector<Candidate>& candidates() const { return candidates_; }
  std::vector<OrientedPair>& order() { return order_; }
  const std::vector<OrientedPair>& order() const { return order_; }

  // Built on first use from the vertices live at that moment.
  const BucketIndex& buckets();

  // Orients a candidate path from the pair's s-representative.
  PairPath to_pair_path(const Candidate& c) const;

 private:
  const Instance* inst_;
  EndpointIndex ends_;
  Adjacency adj_;
  std::vector<char> live_;
  std::vector<char> terminal_;
  std::vector<char> active_;
  std::vector<char> committed_;
  std::vector<PairPath> committed_paths_;
  std::vector<Candidate> candidates_;
  std::vector<OrientedPair> order_;
  std::unique_ptr<BucketIndex> buckets_;
};

// Pipeline steps. Each returns a certificate when it refutes the instance.

void step1_prune_heavy(WorkingState& st);
std::optional<NoCertificate> step2_step3_multipairs(WorkingState& st);
void step4_isolated_terminals(WorkingState& st);
void step5_adjacent_pairs(WorkingState& st);
void step4_step5_adjacent_pairs(WorkingState& st);
// nullopt means "continue with Step 6".
std::optional<Outcome> step5plus_small_k(WorkingState& st);
std::optional<NoCertificate> step6_check_triples(WorkingState& st);
std::optional<NoCertificate> step7_order_terminals(WorkingState& st);
void step8_clear_interpair(WorkingState& st);
void step9a_common_neighbors(WorkingState& st);
void step9bc_connector_candidates(WorkingState& st);
void step9_generate_candidates(WorkingState& st);
// `chosen`, when given, receives the indices of the selected candidates.
Outcome step10_select(WorkingState& st, std::vector<int>* chosen = nullptr);
Outcome step10star_select(WorkingState& st, std::vector<int>* chosen = nullptr);

// What the solver built on its way to the answer.
struct SolveTrace {
  std::vector<Candidate> candidates;
  std::vector<int> selected;  // indices into candidates
  std::vector<OrientedPair> order;
  int active_after_preprocessing = -1;
};

Outcome solve_interval(const Instance& inst, SolveTrace* trace = nullptr);
Outcome solve_circular(const Instance& inst, SolveTrace* trace = nullptr);
// Dispatches on the representation kind. The instance must validate.
Outcome solve(const Instance& inst, SolveTrace* trace = nullptr);

}  // namespace idp
