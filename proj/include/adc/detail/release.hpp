#pragma once

// Iterative teardown for immutable trees of shared nodes with two child
// links `a` and `b`. Uniquely owned children are detached onto a heap
// stack before the parent dies, so long chains never recurse.

#include <memory>
#include <utility>
#include <vector>

namespace adc::detail {

template <class Node>
void release_children(std::shared_ptr<const Node>& a, std::shared_ptr<const Node>& b) {
  std::vector<std::shared_ptr<const Node>> pending;
  if (a) pending.push_back(std::move(a));
  if (b) pending.push_back(std::move(b));
  while (!pending.empty()) {
    std::shared_ptr<const Node> n = std::move(pending.back());
    pending.pop_back();
    if (n.use_count() == 1) {
      auto& m = const_cast<Node&>(*n);
      if (m.a) pending.push_back(std::move(m.a));
      if (m.b) pending.push_back(std::move(m.b));
    }
  }
}

}  // namespace adc::detail
