// src/fst/confusion-network.cc

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

#include "zrasr/fst/confusion-network.h"

#include <cmath>

#include "zrasr/base/error.h"
#include "zrasr/base/text-utils.h"

namespace zrasr {

void ConfusionNetwork::Validate(double tolerance) const {
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].empty())
      throw Error(ErrorKind::kValidation, "confusion network slot " + std::to_string(i) + " is empty");
    double mass = 0.0;
    for (const auto &[phone, cost] : slots[i]) {
      if (phone.empty())
        throw Error(ErrorKind::kValidation, "empty phone in slot " + std::to_string(i));
      if (!std::isfinite(cost) || cost < 0.0)
        throw Error(ErrorKind::kValidation, "bad cost for '" + phone + "' in slot " +
                                                std::to_string(i));
      mass += std::pow(10.0, -cost);
    }
    if (mass > 1.0 + tolerance)
      throw Error(ErrorKind::kValidation, "slot " + std::to_string(i) +
                                              " probabilities sum to " + FormatDouble(mass));
  }
}

PhoneSeq ConfusionNetwork::BestPhones() const {
  PhoneSeq phones;
  for (const auto &slot : slots) {
    const std::pair<std::string, double> *best = nullptr;
    for (const auto &alt : slot)
      if (best == nullptr || alt.second < best->second) best = &alt;
    if (best != nullptr && best->first != kEpsilonSymbol) phones.push_back(best->first);
  }
  return phones;
}

ConfusionNetwork ConfusionNetwork::FromPhones(const PhoneSeq &phones) {
  ConfusionNetwork cn;
  for (const auto &p : phones) cn.slots.push_back({{p, 0.0}});
  return cn;
}

ConfusionNetwork MapConfusionNetwork(const ConfusionNetwork &cn, const PhoneMap &pm) {
  ConfusionNetwork out = cn;
  for (auto &slot : out.slots)
    for (auto &alt : slot)
      if (alt.first != kEpsilonSymbol) alt.first = pm.Map(alt.first);
  return out;
}

Wfst CnToFst(const ConfusionNetwork &cn) {
  Wfst fst;
  auto syms = std::make_shared<SymbolTable>();
  fst.set_isyms(syms);
  fst.set_osyms(syms);
  StateId cur = fst.AddState();
  fst.SetStart(cur);
  for (const auto &slot : cn.slots) {
    StateId next = fst.AddState();
    for (const auto &[phone, cost] : slot) {
      Label l = phone == kEpsilonSymbol ? kEpsilon : syms->AddSymbol(phone);
      fst.AddArc(cur, {l, l, cost, next});
    }
    cur = next;
  }
  fst.SetFinal(cur, 0.0);
  return fst;
}

std::vector<ConfusionNetwork> ReadConfusionNetworks(const std::string &path) {
  std::vector<ConfusionNetwork> cns;
  ConfusionNetwork cur;
  bool open = false;
  auto lines = ReadLines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto tokens = SplitWhitespace(lines[i]);
    if (tokens.empty()) {
      if (open) cns.push_back(std::move(cur));
      cur = ConfusionNetwork();
      open = false;
      continue;
    }
    ConfusionNetwork::Slot slot;
    for (const auto &tok : tokens) {
      auto colon = tok.rfind(':');
      if (colon == std::string::npos || colon == 0)
        throw Error(ErrorKind::kParse, path + ":" + std::to_string(i + 1) +
                                           ": expected phone:cost, got '" + tok + "'");
      slot.emplace_back(tok.substr(0, colon), ParseDouble(tok.substr(colon + 1)));
    }
    cur.slots.push_back(std::move(slot));
    open = true;
  }
  if (open) cns.push_back(std::move(cur));
  for (std::size_t u = 0; u < cns.size(); ++u) {
    try {
      cns[u].Validate();
    } catch (const Error &e) {
      throw Error(e.kind(), path + ": utterance " + std::to_string(u) + ": " + e.what());
    }
  }
  return cns;
}

void WriteConfusionNetworks(const std::string &path,
                            const std::vector<ConfusionNetwork> &cns) {
  std::string text;
  for (std::size_t u = 0; u < cns.size(); ++u) {
    if (u > 0) text += "\n";
    for (const auto &slot : cns[u].slots) {
      std::vector<std::string> alts;
      for (const auto &[phone, cost] : slot) alts.push_back(phone + ":" + FormatDouble(cost));
      text += Join(alts, " ") + "\n";
    }
  }
  WriteFile(path, text);
}

}  // namespace zrasr
