#include "fortlib/forcing.hpp"

namespace fortlib {

std::pair<std::vector<Force>, VertexSet> forcing_step(const Graph& g, const VertexSet& filled) {
  std::vector<Force> forces;
  VertexSet forced(g.order());
  filled.for_each([&](int u) {
    VertexSet white = g.neighborhood(u) - filled;
    if (white.count() == 1) {
      int v = white.first();
      if (!forced.test(v)) {  // ascending u, so the first forcer is the smallest
        forced.set(v);
        forces.push_back({u, v});
      }
    }
  });
  return {std::move(forces), filled | forced};
}

ForcingTrace closure(const Graph& g, const VertexSet& start) {
  ForcingTrace trace{start, {}, start};
  while (true) {
    auto [forces, after] = forcing_step(g, trace.final);
    if (forces.empty()) break;
    trace.steps.push_back(std::move(forces));
    trace.final = std::move(after);
  }
  return trace;
}

bool is_zero_forcing_set(const Graph& g, const VertexSet& s) {
  return closure(g, s).final == VertexSet::full(g.order());
}

int propagation_time(const Graph& g, const VertexSet& s) {
  ForcingTrace trace = closure(g, s);
  if (trace.final != VertexSet::full(g.order()))
    throw not_zero_forcing_error("set is not a zero forcing set; closure stalls at " +
                                     trace.final.to_string(),
                                 trace.final);
  return trace.propagation_steps();
}

bool is_stalled(const Graph& g, const VertexSet& s) {
  auto [forces, after] = forcing_step(g, s);
  (void)after;
  return forces.empty() && s != VertexSet::full(g.order());
}

}  // namespace fortlib
