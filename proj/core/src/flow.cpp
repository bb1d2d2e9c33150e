#include "flow.hpp"

#include <queue>
#include <utility>

namespace oddpack::detail {

void FlowNetwork::add_arc(int from, int to, int capacity) {
  auto& out = arcs_[static_cast<std::size_t>(from)];
  auto& in = arcs_[static_cast<std::size_t>(to)];
  out.push_back({to, capacity, capacity, in.size()});
  in.push_back({from, 0, 0, out.size() - 1});
}

int FlowNetwork::max_flow(int source, int sink, int limit) {
  int flow = 0;
  const auto n = arcs_.size();
  std::vector<std::pair<int, std::size_t>> via(n);
  while (flow < limit) {
    std::vector<bool> seen(n, false);
    std::queue<int> queue;
    queue.push(source);
    seen[static_cast<std::size_t>(source)] = true;
    while (!queue.empty() && !seen[static_cast<std::size_t>(sink)]) {
      const int v = queue.front();
      queue.pop();
      const auto& out = arcs_[static_cast<std::size_t>(v)];
      for (std::size_t i = 0; i < out.size(); ++i) {
        const Arc& a = out[i];
        if (a.capacity > 0 && !seen[static_cast<std::size_t>(a.to)]) {
          seen[static_cast<std::size_t>(a.to)] = true;
          via[static_cast<std::size_t>(a.to)] = {v, i};
          queue.push(a.to);
        }
      }
    }
    if (!seen[static_cast<std::size_t>(sink)]) break;
    for (int v = sink; v != source;) {
      const auto [from, index] = via[static_cast<std::size_t>(v)];
      Arc& a = arcs_[static_cast<std::size_t>(from)][index];
      a.capacity -= 1;
      arcs_[static_cast<std::size_t>(v)][a.reverse].capacity += 1;
      v = from;
    }
    ++flow;
  }
  return flow;
}

std::vector<bool> FlowNetwork::residual_reachable(int source) const {
  std::vector<bool> seen(arcs_.size(), false);
  std::queue<int> queue;
  queue.push(source);
  seen[static_cast<std::size_t>(source)] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (const Arc& a : arcs_[static_cast<std::size_t>(v)]) {
      if (a.capacity > 0 && !seen[static_cast<std::size_t>(a.to)]) {
        seen[static_cast<std::size_t>(a.to)] = true;
        queue.push(a.to);
      }
    }
  }
  return seen;
}

std::vector<std::vector<int>> FlowNetwork::decompose(int source, int sink) {
  std::vector<std::vector<int>> paths;
  while (true) {
    std::vector<int> path;
    int v = source;
    while (v != sink) {
      bool advanced = false;
      for (Arc& a : arcs_[static_cast<std::size_t>(v)]) {
        if (a.original > 0 && a.capacity < a.original) {
          a.capacity += 1;  // consume one unit of flow on this arc
          arcs_[static_cast<std::size_t>(a.to)][a.reverse].capacity -= 1;
          path.push_back(a.to);
          v = a.to;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
    if (v != sink) break;
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace oddpack::detail
