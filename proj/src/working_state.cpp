#include <algorithm>

#include "idp/solver.hpp"

namespace idp {

std::string NoCertificate::detail() const {
  std::string out;
  auto add = [&out](const std::string& field) {
    if (!out.empty()) out += ',';
    out += field;
  };
  if (pair >= 0) add("pair=" + std::to_string(pair + 1));
  if (vertex >= 0) add("vertex=" + std::to_string(vertex));
  if (!note.empty()) add(note);
  return out.empty() ? "-" : out;
}

WorkingState::WorkingState(const Instance& inst)
    : inst_(&inst),
      ends_(inst.rep),
      adj_(build_adjacency(inst.rep, ends_)),
      live_(inst.n(), 1),
      terminal_(inst.n(), 0),
      active_(inst.k(), 1),
      committed_(inst.k(), 0) {
  for (const auto& p : inst.pairs) {
    terminal_[p.s] = 1;
    terminal_[p.t] = 1;
  }
}

int WorkingState::active_count() const {
  return int(std::count(active_.begin(), active_.end(), 1));
}

std::vector<int> WorkingState::active_pairs() const {
  std::vector<int> out;
  for (int i = 0; i < int(active_.size()); ++i) {
    if (active_[i]) out.push_back(i);
  }
  return out;
}

void WorkingState::commit_terminal_path(int pair) {
  active_[pair] = 0;
  if (committed_[pair]) return;
  committed_[pair] = 1;
  const auto& p = inst_->pairs[pair];
  committed_paths_.push_back(PairPath{pair, {p.s, p.t}});
}

int WorkingState::quota(int pair) const {
  return inst_->pairs[pair].requirement - (committed_[pair] ? 1 : 0);
}

const BucketIndex& WorkingState::buckets() {
  if (!buckets_) {
    buckets_ = std::make_unique<BucketIndex>(
        inst_->rep, [this](Vertex v) { return live_[v] != 0; });
  }
  return *buckets_;
}

PairPath WorkingState::to_pair_path(const Candidate& c) const {
  PairPath path{c.color, {}};
  path.vertices.reserve(c.witness.size() + 2);
  path.vertices.push_back(c.from);
  path.vertices.insert(path.vertices.end(), c.witness.begin(), c.witness.end());
  path.vertices.push_back(c.to);
  if (path.vertices.front() != inst_->pairs[c.color].s) {
    std::reverse(path.vertices.begin(), path.vertices.end());
  }
  return path;
}

}  // namespace idp
