// src/fst/compose.cc

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

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "zrasr/base/error.h"
#include "zrasr/fst/fst-ops.h"

namespace zrasr {

Wfst Compose(const Wfst &a, const Wfst &b, const SizeBudget &budget) {
  Wfst out;
  out.set_isyms(a.isyms());
  out.set_osyms(b.osyms());
  if (a.NumStates() == 0 || b.NumStates() == 0 || a.start() == kNoState ||
      b.start() == kNoState)
    return out;

  std::vector<Label> to_b(a.osyms()->size(), kNoLabel);
  to_b[kEpsilon] = kEpsilon;
  for (std::size_t l = 1; l < a.osyms()->size(); ++l) {
    Label m = b.isyms()->Find(a.osyms()->Symbol(static_cast<Label>(l)));
    if (m != b.phi_label()) to_b[l] = m;
  }
  const Label phi = b.phi_label();
  ArcIndex index(b);

  // Failure successor of a state of b and its weight, if any.
  auto fail = [&](StateId q, StateId *next, double *w) {
    if (phi == kNoLabel) return false;
    auto [lo, hi] = index.Find(q, phi);
    if (lo == hi) return false;
    const Arc &arc = b.Arcs(q)[*lo];
    *next = arc.nextstate;
    *w = arc.weight;
    return true;
  };
  const std::size_t max_fail_steps = b.NumStates();

  std::unordered_map<std::uint64_t, StateId> state_of;
  std::deque<std::pair<StateId, StateId>> queue;
  auto check_budget = [&]() {
    if (out.NumStates() > budget.max_states || out.NumArcs() > budget.max_arcs)
      throw BudgetExceededError(out.NumStates(), out.NumArcs(), budget.max_states,
                                budget.max_arcs);
  };
  auto get_state = [&](StateId p, StateId q) {
    std::uint64_t key = (static_cast<std::uint64_t>(p) << 32) | static_cast<std::uint32_t>(q);
    auto it = state_of.find(key);
    if (it != state_of.end()) return it->second;
    StateId s = out.AddState();
    state_of.emplace(key, s);
    queue.emplace_back(p, q);
    check_budget();
    return s;
  };

  out.SetStart(get_state(a.start(), b.start()));
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    const StateId s = state_of.at((static_cast<std::uint64_t>(p) << 32) |
                                  static_cast<std::uint32_t>(q));
    if (a.IsFinal(p)) {
      double acc = 0.0;
      StateId cur = q;
      for (std::size_t steps = 0; steps <= max_fail_steps; ++steps) {
        if (b.IsFinal(cur)) {
          out.SetFinal(s, a.Final(p) + acc + b.Final(cur));
          break;
        }
        StateId nxt;
        double w;
        if (!fail(cur, &nxt, &w)) break;
        acc += w;
        cur = nxt;
      }
    }
    for (const Arc &ea : a.Arcs(p)) {
      if (ea.olabel == kEpsilon) {
        out.AddArc(s, {ea.ilabel, kEpsilon, ea.weight, get_state(ea.nextstate, q)});
        check_budget();
        continue;
      }
      const Label x = to_b[ea.olabel];
      if (x == kNoLabel) continue;
      double acc = 0.0;
      StateId cur = q;
      for (std::size_t steps = 0; steps <= max_fail_steps; ++steps) {
        auto [lo, hi] = index.Find(cur, x);
        if (lo != hi) {
          for (auto it = lo; it != hi; ++it) {
            const Arc &eb = b.Arcs(cur)[*it];
            out.AddArc(s, {ea.ilabel, eb.olabel, ea.weight + acc + eb.weight,
                           get_state(ea.nextstate, eb.nextstate)});
            check_budget();
          }
          break;
        }
        StateId nxt;
        double w;
        if (!fail(cur, &nxt, &w)) break;
        acc += w;
        cur = nxt;
      }
    }
    auto [lo, hi] = index.Find(q, kEpsilon);
    for (auto it = lo; it != hi; ++it) {
      const Arc &eb = b.Arcs(q)[*it];
      out.AddArc(s, {kEpsilon, eb.olabel, eb.weight, get_state(p, eb.nextstate)});
      check_budget();
    }
  }
  return out;
}

}  // namespace zrasr
