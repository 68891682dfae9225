#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <iterator>
#include <span>
#include <vector>

#include "idp/geometry.hpp"

namespace idp {

// owner[p] is the vertex with an endpoint at p; is_left[p] says which one.
struct EndpointIndex {
  std::vector<Vertex> owner;
  std::vector<char> is_left;

  explicit EndpointIndex(const Representation& rep);
};

// Neighbor lists with vertices ranked by left endpoint. The neighbors of v
// are the ranges covering v's left endpoint, stored explicitly, followed by
// the ranges whose left endpoint lies inside v, which form a cyclic run of
// consecutive ranks.
class Adjacency {
 public:
  class Neighbors {
   public:
    class iterator {
     public:
      using value_type = Vertex;
      using difference_type = std::ptrdiff_t;

      iterator() = default;
      iterator(const Vertex* p, const Vertex* stop, const Vertex* by_rank,
               int rank, int left, int n)
          : p_(p), stop_(stop), by_rank_(by_rank), rank_(rank), left_(left), n_(n) {}

      Vertex operator*() const { return p_ != stop_ ? *p_ : by_rank_[rank_]; }
      iterator& operator++() {
        if (p_ != stop_) {
          ++p_;
        } else {
          if (++rank_ == n_) rank_ = 0;
          --left_;
        }
        return *this;
      }
      iterator operator++(int) {
        iterator old = *this;
        ++*this;
        return old;
      }
      friend bool operator==(const iterator& it, std::default_sentinel_t) {
        return it.p_ == it.stop_ && it.left_ == 0;
      }

     private:
      const Vertex* p_ = nullptr;
      const Vertex* stop_ = nullptr;
      const Vertex* by_rank_ = nullptr;
      int rank_ = 0;
      int left_ = 0;
      int n_ = 0;
    };

    Neighbors(iterator first, int size) : first_(first), size_(size) {}
    iterator begin() const { return first_; }
    std::default_sentinel_t end() const { return {}; }
    int size() const { return size_; }

   private:
    iterator first_;
    int size_;
  };

  Adjacency() = default;

  int n() const { return int(rank_.size()); }
  std::int64_t edge_count() const { return edges_; }
  Neighbors neighbors(Vertex v) const {
    const int r = rank_[v];
    const Vertex* b = covering_.data() + offsets_[r];
    const Vertex* e = covering_.data() + offsets_[r + 1];
    const int next = r + 1 == n() ? 0 : r + 1;
    return {Neighbors::iterator(b, e, by_rank_.data(), next, inside_[r], n()),
            int(e - b) + inside_[r]};
  }
  int degree(Vertex v) const {
    const int r = rank_[v];
    return int(offsets_[r + 1] - offsets_[r]) + inside_[r];
  }

 private:
  friend Adjacency build_adjacency(const Representation&, const EndpointIndex&);

  std::vector<Vertex> rank_;     // by vertex
  std::vector<Vertex> by_rank_;
  std::vector<std::int64_t> offsets_;  // by rank, into covering_
  std::vector<Vertex> covering_;
  std::vector<int> inside_;      // by rank
  std::int64_t edges_ = 0;
};

// One sweep over endpoints 1..2n keeping the set of open ranges. O(n + m).
Adjacency build_adjacency(const Representation& rep, const EndpointIndex& ends);
Adjacency build_adjacency(const Representation& rep);

// bucket(p) lists every live vertex whose range covers point p.
class BucketIndex {
 public:
  BucketIndex(const Representation& rep, const std::function<bool(Vertex)>& live);

  std::span<const Vertex> bucket(int p) const {
    return {items_.data() + offsets_[p],
            static_cast<std::size_t>(offsets_[p + 1] - offsets_[p])};
  }
  std::int64_t total_size() const { return std::int64_t(items_.size()); }
  int points() const { return int(offsets_.size()) - 2; }

 private:
  std::vector<std::int64_t> offsets_;  // indexed 1..2n, offsets_[2n+1] = end
  std::vector<Vertex> items_;
};

}  // namespace idp
