// src/fst/shortest-path.cc

// Copyright 2026  The zrasr Authors

// See the top-level COPYING file for clarification regarding multiple authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <deque>
#include <functional>
#include <queue>

#include "zrasr/base/error.h"
#include "zrasr/fst/fst-ops.h"

namespace zrasr {

PathResult ShortestPath(const Wfst &fst) {
  const std::size_t n = fst.NumStates();
  if (n == 0 || fst.start() == kNoState)
    throw Error(ErrorKind::kNoPath, "machine has no states");
  std::vector<double> dist(n, kInfinity);
  std::vector<StateId> prev_state(n, kNoState);
  std::vector<std::size_t> prev_arc(n, 0);
  bool negative = false;
  for (StateId s = 0; s < static_cast<StateId>(n) && !negative; ++s)
    for (const auto &arc : fst.Arcs(s))
      if (arc.weight < 0.0) {
        negative = true;
        break;
      }

  auto relax = [&](StateId s, std::size_t i) {
    const Arc &arc = fst.Arcs(s)[i];
    double d = dist[s] + arc.weight;
    if (d < dist[arc.nextstate]) {
      dist[arc.nextstate] = d;
      prev_state[arc.nextstate] = s;
      prev_arc[arc.nextstate] = i;
      return true;
    }
    return false;
  };

  dist[fst.start()] = 0.0;
  if (!negative) {
    using Item = std::pair<double, StateId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    std::vector<bool> done(n, false);
    heap.emplace(0.0, fst.start());
    while (!heap.empty()) {
      auto [d, s] = heap.top();
      heap.pop();
      if (done[s]) continue;
      done[s] = true;
      for (std::size_t i = 0; i < fst.Arcs(s).size(); ++i)
        if (relax(s, i)) heap.emplace(dist[fst.Arcs(s)[i].nextstate], fst.Arcs(s)[i].nextstate);
    }
  } else {
    std::deque<StateId> queue{fst.start()};
    std::vector<bool> queued(n, false);
    std::vector<std::size_t> updates(n, 0);
    queued[fst.start()] = true;
    while (!queue.empty()) {
      StateId s = queue.front();
      queue.pop_front();
      queued[s] = false;
      for (std::size_t i = 0; i < fst.Arcs(s).size(); ++i) {
        if (!relax(s, i)) continue;
        StateId t = fst.Arcs(s)[i].nextstate;
        if (!queued[t]) {
          // Without a negative cycle a state enters the queue at most n times.
          if (++updates[t] > n)
            throw Error(ErrorKind::kValidation, "negative-weight cycle reachable from start");
          queued[t] = true;
          queue.push_back(t);
        }
      }
    }
  }

  StateId best = kNoState;
  double best_weight = kInfinity;
  for (StateId s = 0; s < static_cast<StateId>(n); ++s) {
    if (dist[s] == kInfinity || !fst.IsFinal(s)) continue;
    double w = dist[s] + fst.Final(s);
    if (w < best_weight) {
      best_weight = w;
      best = s;
    }
  }
  if (best == kNoState) throw Error(ErrorKind::kNoPath, "no accepting path");

  PathResult result;
  result.weight = best_weight;
  std::vector<const Arc *> path;
  for (StateId s = best; prev_state[s] != kNoState; s = prev_state[s])
    path.push_back(&fst.Arcs(prev_state[s])[prev_arc[s]]);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const Arc &arc = **it;
    if (arc.ilabel != kEpsilon && arc.ilabel != fst.phi_label()) result.ilabels.push_back(arc.ilabel);
    if (arc.olabel != kEpsilon && arc.olabel != fst.phi_label()) {
      result.olabels.push_back(arc.olabel);
      result.output.push_back(fst.osyms()->Symbol(arc.olabel));
    }
  }
  return result;
}

}  // namespace zrasr
