#pragma once

#include <cassert>
#include <span>
#include <vector>

#include "fptvc/graph.hpp"

namespace fptvc {

// The solver's partial cover. Membership is a flag per vertex; the trail
// records insertion order so a branch can undo exactly what it added.
class SelectedSet {
 public:
  SelectedSet() = default;
  explicit SelectedSet(std::size_t vertex_count) : flags_(vertex_count, 0) {}

  bool contains(Vertex v) const { return flags_[v] != 0; }
  std::size_t size() const { return trail_.size(); }
  bool empty() const { return trail_.empty(); }
  std::span<const Vertex> trail() const { return trail_; }

  void push(Vertex v) {
    assert(!flags_[v]);
    flags_[v] = 1;
    trail_.push_back(v);
  }

  // Removes the `count` most recently pushed vertices.
  void pop(std::size_t count) {
    assert(count <= trail_.size());
    for (; count > 0; --count) {
      flags_[trail_.back()] = 0;
      trail_.pop_back();
    }
  }

  void pop_to(std::size_t size) { pop(trail_.size() - size); }

  friend bool operator==(const SelectedSet&, const SelectedSet&) = default;

 private:
  std::vector<char> flags_;
  std::vector<Vertex> trail_;
};

}  // namespace fptvc
