// src/fst/wfst.cc

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

#include "zrasr/fst/wfst.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zrasr/base/error.h"
#include "zrasr/base/text-utils.h"

namespace zrasr {

SymbolTable::SymbolTable() { AddSymbol(kEpsilonSymbol); }

Label SymbolTable::AddSymbol(const std::string &symbol) {
  auto it = ids_.find(symbol);
  if (it != ids_.end()) return it->second;
  Label id = static_cast<Label>(symbols_.size());
  symbols_.push_back(symbol);
  ids_.emplace(symbol, id);
  return id;
}

Label SymbolTable::Find(const std::string &symbol) const {
  auto it = ids_.find(symbol);
  return it == ids_.end() ? kNoLabel : it->second;
}

SymbolTable SymbolTable::Read(const std::string &path) {
  std::vector<std::string> by_id;
  auto lines = ReadLines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (Trim(lines[i]).empty()) continue;
    auto f = SplitOn(lines[i], '\t');
    if (f.size() != 2)
      throw Error(ErrorKind::kParse, path + ":" + std::to_string(i + 1) + ": expected symbol<TAB>id");
    long long id = ParseInt(Trim(f[1]));
    if (id < 0 || id > 50000000)
      throw Error(ErrorKind::kParse, path + ":" + std::to_string(i + 1) + ": bad symbol id");
    if (by_id.size() <= static_cast<std::size_t>(id)) by_id.resize(id + 1);
    if (!by_id[id].empty())
      throw Error(ErrorKind::kParse, path + ":" + std::to_string(i + 1) + ": id reused");
    by_id[id] = f[0];
  }
  if (by_id.empty() || by_id[0] != kEpsilonSymbol)
    throw Error(ErrorKind::kParse, path + ": id 0 must be " + kEpsilonSymbol);
  SymbolTable table;
  for (std::size_t id = 1; id < by_id.size(); ++id) {
    if (by_id[id].empty())
      throw Error(ErrorKind::kParse, path + ": symbol ids are not dense");
    if (table.AddSymbol(by_id[id]) != static_cast<Label>(id))
      throw Error(ErrorKind::kParse, path + ": symbol '" + by_id[id] + "' listed twice");
  }
  return table;
}

void SymbolTable::Write(const std::string &path) const {
  std::string text;
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    text += symbols_[i] + "\t" + std::to_string(i) + "\n";
  WriteFile(path, text);
}

Wfst::Wfst()
    : isyms_(std::make_shared<SymbolTable>()), osyms_(std::make_shared<SymbolTable>()) {}

StateId Wfst::AddState() {
  arcs_.emplace_back();
  finals_.push_back(kInfinity);
  return static_cast<StateId>(arcs_.size() - 1);
}

void Wfst::ReserveStates(std::size_t n) {
  arcs_.reserve(n);
  finals_.reserve(n);
}

void Wfst::AddArc(StateId s, const Arc &arc) {
  arcs_[s].push_back(arc);
  ++num_arcs_;
}

void Wfst::Validate() const {
  const auto n = static_cast<StateId>(NumStates());
  if (n > 0 && (start_ < 0 || start_ >= n))
    throw Error(ErrorKind::kValidation, "start state out of range");
  for (StateId s = 0; s < n; ++s) {
    if (std::isnan(finals_[s]) || finals_[s] == -kInfinity)
      throw Error(ErrorKind::kValidation, "bad final weight at state " + std::to_string(s));
    for (const auto &arc : arcs_[s]) {
      if (arc.nextstate < 0 || arc.nextstate >= n)
        throw Error(ErrorKind::kValidation, "dangling arc from state " + std::to_string(s));
      if (!std::isfinite(arc.weight))
        throw Error(ErrorKind::kValidation, "non-finite arc weight at state " + std::to_string(s));
      if (arc.ilabel < 0 || static_cast<std::size_t>(arc.ilabel) >= isyms_->size() ||
          arc.olabel < 0 || static_cast<std::size_t>(arc.olabel) >= osyms_->size())
        throw Error(ErrorKind::kValidation, "arc label outside symbol table at state " +
                                               std::to_string(s));
    }
  }
}

ArcIndex::ArcIndex(const Wfst &fst) : fst_(fst), order_(fst.NumStates()) {
  for (StateId s = 0; s < static_cast<StateId>(fst.NumStates()); ++s) {
    const auto &arcs = fst.Arcs(s);
    auto &idx = order_[s];
    idx.resize(arcs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<std::uint32_t>(i);
    std::stable_sort(idx.begin(), idx.end(), [&](std::uint32_t x, std::uint32_t y) {
      return arcs[x].ilabel < arcs[y].ilabel;
    });
  }
}

std::pair<const std::uint32_t *, const std::uint32_t *> ArcIndex::Find(StateId s,
                                                                      Label label) const {
  const auto &idx = order_[s];
  const auto &arcs = fst_.Arcs(s);
  auto lo = std::lower_bound(idx.begin(), idx.end(), label,
                             [&](std::uint32_t i, Label l) { return arcs[i].ilabel < l; });
  auto hi = std::upper_bound(lo, idx.end(), label,
                             [&](Label l, std::uint32_t i) { return l < arcs[i].ilabel; });
  return {idx.data() + (lo - idx.begin()), idx.data() + (hi - idx.begin())};
}

void WriteFstText(const Wfst &fst, const std::string &path) {
  std::ostringstream out;
  const auto n = static_cast<StateId>(fst.NumStates());
  auto emit = [&](StateId s) {
    for (const auto &arc : fst.Arcs(s))
      out << s << '\t' << arc.nextstate << '\t' << arc.ilabel << '\t' << arc.olabel << '\t'
          << FormatDouble(arc.weight) << '\n';
    if (fst.IsFinal(s)) out << s << '\t' << FormatDouble(fst.Final(s)) << '\n';
  };
  if (n > 0) {
    // The start state must lead the file; a start state with neither arcs
    // nor finality cannot be expressed and yields an empty machine.
    emit(fst.start());
    for (StateId s = 0; s < n; ++s)
      if (s != fst.start()) emit(s);
  }
  WriteFile(path, out.str());
}

Wfst ReadFstText(const std::string &path, std::shared_ptr<SymbolTable> isyms,
                 std::shared_ptr<SymbolTable> osyms) {
  Wfst fst;
  fst.set_isyms(std::move(isyms));
  fst.set_osyms(std::move(osyms));
  auto ensure = [&](long long s) {
    while (static_cast<long long>(fst.NumStates()) <= s) fst.AddState();
  };
  auto lines = ReadLines(path);
  bool first = true;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (Trim(lines[i]).empty()) continue;
    auto f = SplitOn(lines[i], '\t');
    std::string where = path + ":" + std::to_string(i + 1);
    long long src = 0;
    if (f.size() == 5) {
      src = ParseInt(f[0]);
      long long dst = ParseInt(f[1]), il = ParseInt(f[2]), ol = ParseInt(f[3]);
      if (src < 0 || dst < 0 || il < 0 || ol < 0)
        throw Error(ErrorKind::kParse, where + ": negative id");
      ensure(std::max(src, dst));
      fst.AddArc(static_cast<StateId>(src),
                 {static_cast<Label>(il), static_cast<Label>(ol), ParseDouble(f[4]),
                  static_cast<StateId>(dst)});
    } else if (f.size() == 2 || f.size() == 1) {
      src = ParseInt(f[0]);
      if (src < 0) throw Error(ErrorKind::kParse, where + ": negative state");
      ensure(src);
      fst.SetFinal(static_cast<StateId>(src), f.size() == 2 ? ParseDouble(f[1]) : 0.0);
    } else {
      throw Error(ErrorKind::kParse, where + ": expected 5 fields (arc) or 2 (final)");
    }
    if (first) {
      fst.SetStart(static_cast<StateId>(src));
      first = false;
    }
  }
  Label phi = fst.isyms()->Find(kBackoffSymbol);
  if (phi != kNoLabel) fst.set_phi_label(phi);
  fst.Validate();
  return fst;
}

void StripDisambiguation(Wfst *fst) {
  const auto &syms = *fst->isyms();
  std::vector<bool> disambig(syms.size(), false);
  for (std::size_t i = 1; i < syms.size(); ++i)
    disambig[i] = syms.Symbol(static_cast<Label>(i)).starts_with("#") &&
                  static_cast<Label>(i) != fst->phi_label();
  for (StateId s = 0; s < static_cast<StateId>(fst->NumStates()); ++s)
    for (auto &arc : fst->MutableArcs(s))
      if (disambig[arc.ilabel]) arc.ilabel = kEpsilon;
}

}  // namespace zrasr
