// include/zrasr/fst/wfst.h

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

#ifndef ZRASR_FST_WFST_H_
#define ZRASR_FST_WFST_H_

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace zrasr {

using Label = std::int32_t;
using StateId = std::int32_t;

inline constexpr Label kEpsilon = 0;
inline constexpr Label kNoLabel = -1;
inline constexpr StateId kNoState = -1;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

inline const std::string kEpsilonSymbol = "<eps>";
// Input symbol of backoff (failure) arcs in grammar machines.
inline const std::string kBackoffSymbol = "#0";

// Bidirectional symbol/id map; id 0 is always <eps>.
class SymbolTable {
 public:
  SymbolTable();

  Label AddSymbol(const std::string &symbol);
  Label Find(const std::string &symbol) const;  // kNoLabel if absent
  const std::string &Symbol(Label id) const { return symbols_[id]; }
  std::size_t size() const { return symbols_.size(); }

  // `symbol<TAB>id` per line, ids dense from 0.
  static SymbolTable Read(const std::string &path);
  void Write(const std::string &path) const;

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Label> ids_;
};

struct SizeBudget {
  std::size_t max_states = 30000000;
  std::size_t max_arcs = 100000000;
};

struct Arc {
  Label ilabel = kEpsilon;
  Label olabel = kEpsilon;
  double weight = 0.0;  // tropical: -log10 probability
  StateId nextstate = kNoState;
};

// Mutable weighted transducer over the tropical semiring.
class Wfst {
 public:
  Wfst();

  StateId AddState();
  void SetStart(StateId s) { start_ = s; }
  StateId start() const { return start_; }
  void SetFinal(StateId s, double weight) { finals_[s] = weight; }
  double Final(StateId s) const { return finals_[s]; }  // kInfinity if not final
  bool IsFinal(StateId s) const { return finals_[s] != kInfinity; }
  void AddArc(StateId s, const Arc &arc);
  const std::vector<Arc> &Arcs(StateId s) const { return arcs_[s]; }
  std::vector<Arc> &MutableArcs(StateId s) { return arcs_[s]; }
  std::size_t NumStates() const { return arcs_.size(); }
  std::size_t NumArcs() const { return num_arcs_; }
  void ReserveStates(std::size_t n);

  const std::shared_ptr<SymbolTable> &isyms() const { return isyms_; }
  const std::shared_ptr<SymbolTable> &osyms() const { return osyms_; }
  void set_isyms(std::shared_ptr<SymbolTable> t) { isyms_ = std::move(t); }
  void set_osyms(std::shared_ptr<SymbolTable> t) { osyms_ = std::move(t); }

  // Input label with failure semantics (taken only when no other arc
  // matches), or kNoLabel.
  Label phi_label() const { return phi_label_; }
  void set_phi_label(Label l) { phi_label_ = l; }

  // Throws kValidation on dangling arcs, NaN weights or labels outside the
  // symbol tables.
  void Validate() const;

 private:
  StateId start_ = kNoState;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<double> finals_;
  std::size_t num_arcs_ = 0;
  std::shared_ptr<SymbolTable> isyms_, osyms_;
  Label phi_label_ = kNoLabel;
};

// Arcs of every state ordered by input label, for matching.  The machine
// must outlive the index and stay unmodified.
class ArcIndex {
 public:
  explicit ArcIndex(const Wfst &fst);

  // Positions in fst.Arcs(s) of the arcs with input `label`.
  std::pair<const std::uint32_t *, const std::uint32_t *> Find(StateId s, Label label) const;

 private:
  const Wfst &fst_;
  std::vector<std::vector<std::uint32_t>> order_;
};

// Arcs `src<TAB>dst<TAB>ilabel<TAB>olabel<TAB>weight` and finals
// `state<TAB>weight`, numeric labels; the first line's source is the start
// state.  The symbol tables are written separately.
void WriteFstText(const Wfst &fst, const std::string &path);
Wfst ReadFstText(const std::string &path, std::shared_ptr<SymbolTable> isyms,
                 std::shared_ptr<SymbolTable> osyms);

// Relabels every input symbol starting with '#' to epsilon, except the
// machine's failure label.
void StripDisambiguation(Wfst *fst);

}  // namespace zrasr

#endif  // ZRASR_FST_WFST_H_
