#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace gmr {

/// Iterative Tarjan. Assigns every node an SCC id such that for each edge
/// a -> b, scc[a] >= scc[b]; ids therefore come out in reverse topological
/// order (sinks first). `successors(v)` returns an iterable of node ids.
/// Returns the number of components.
template <class Successors>
std::uint32_t strongly_connected_components(std::uint32_t num_nodes, Successors&& successors,
                                            std::vector<std::uint32_t>& scc) {
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  scc.assign(num_nodes, kUnvisited);
  std::vector<std::uint32_t> order(num_nodes, kUnvisited), low(num_nodes, 0);
  std::vector<std::uint8_t> on_stack(num_nodes, 0);
  std::vector<std::uint32_t> stack;
  // DFS frames: node and position within its successor list.
  std::vector<std::pair<std::uint32_t, std::size_t>> frames;
  std::uint32_t next_order = 0, count = 0;

  for (std::uint32_t root = 0; root < num_nodes; ++root) {
    if (order[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    order[root] = low[root] = next_order++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto& succ = successors(v);
      if (pos < succ.size()) {
        const std::uint32_t w = succ[pos++];
        if (order[w] == kUnvisited) {
          order[w] = low[w] = next_order++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[w] && order[w] < low[v]) {
          low[v] = order[w];
        }
        continue;
      }
      const std::uint32_t done = v;
      frames.pop_back();
      if (!frames.empty() && low[done] < low[frames.back().first]) low[frames.back().first] = low[done];
      if (low[done] == order[done]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          scc[w] = count;
        } while (w != done);
        ++count;
      }
    }
  }
  return count;
}

}  // namespace gmr
