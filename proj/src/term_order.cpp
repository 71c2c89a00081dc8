// Copyright 2026 The flatlim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "flatlim/term_order.hpp"

#include <algorithm>
#include <sstream>

namespace flatlim {

WeightVector::WeightVector(std::vector<long> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw DomainError("empty weight vector");
  bool nonzero = false;
  for (long w : weights_) {
    if (w < 0) throw DomainError("weight vector entries must be nonnegative");
    nonzero = nonzero || w != 0;
  }
  if (!nonzero) throw DomainError("weight vector must not be identically zero");
}

std::string WeightVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(weights_[i]);
  }
  return out + ")";
}

TermOrder TermOrder::lex(std::size_t num_vars) {
  TermOrder o;
  o.kind_ = Kind::kLex;
  o.num_vars_ = num_vars;
  o.num_rows_ = num_vars;
  o.rows_.assign(num_vars * num_vars, 0);
  for (std::size_t i = 0; i < num_vars; ++i) o.rows_[i * num_vars + i] = 1;
  o.name_ = "lex";
  if (num_vars != kNumVars) o.name_ += std::to_string(num_vars);
  return o;
}

TermOrder TermOrder::grevlex(std::size_t num_vars) {
  TermOrder o;
  o.kind_ = Kind::kGrevlex;
  o.num_vars_ = num_vars;
  o.num_rows_ = num_vars;
  o.rows_.assign(num_vars * num_vars, 0);
  for (std::size_t i = 0; i < num_vars; ++i) o.rows_[i] = 1;
  // Remaining rows: -e_last, -e_{last-1}, ..., -e_1 (the last is redundant
  // for a total order but harmless).
  for (std::size_t r = 1; r < num_vars; ++r) o.rows_[r * num_vars + (num_vars - r)] = -1;
  o.name_ = "grevlex";
  if (num_vars != kNumVars) o.name_ += std::to_string(num_vars);
  return o;
}

TermOrder TermOrder::weight_refined(const WeightVector& omega, const TermOrder& tie_break) {
  if (omega.size() != tie_break.num_vars_) throw DomainError("weight vector length does not match tie-break order");
  TermOrder o;
  o.kind_ = Kind::kWeightRefined;
  o.num_vars_ = tie_break.num_vars_;
  o.num_rows_ = tie_break.num_rows_ + 1;
  o.rows_ = omega.weights();
  o.rows_.insert(o.rows_.end(), tie_break.rows_.begin(), tie_break.rows_.end());
  o.weights_ = omega.weights();
  o.name_ = "weight" + omega.str();
  if (tie_break.name_ != "grevlex") o.name_ += "[" + tie_break.name_ + "]";
  return o;
}

TermOrder TermOrder::block(std::vector<std::vector<std::size_t>> groups, std::vector<TermOrder> inner) {
  if (groups.size() != inner.size() || groups.empty()) throw DomainError("block order needs one inner order per group");
  std::size_t n = 0;
  for (const auto& g : groups) n += g.size();
  std::vector<int> seen(n, 0);
  TermOrder o;
  o.kind_ = Kind::kBlock;
  o.num_vars_ = n;
  std::ostringstream name;
  name << "block(";
  for (std::size_t b = 0; b < groups.size(); ++b) {
    const auto& g = groups[b];
    const auto& in = inner[b];
    if (in.num_vars_ != g.size()) throw DomainError("inner order size does not match its block");
    for (std::size_t v : g) {
      if (v >= n || seen[v]++) throw DomainError("block groups must partition the variables");
    }
    for (std::size_t r = 0; r < in.num_rows_; ++r) {
      std::vector<long> row(n, 0);
      for (std::size_t k = 0; k < g.size(); ++k) row[g[k]] = in.rows_[r * g.size() + k];
      o.rows_.insert(o.rows_.end(), row.begin(), row.end());
      ++o.num_rows_;
    }
    if (b) name << ';';
    for (std::size_t k = 0; k < g.size(); ++k) name << kVarNames.at(g[k]);
    name << ':' << in.name_;
  }
  name << ')';
  o.name_ = name.str();
  return o;
}

TermOrder TermOrder::eliminate_aux() {
  return block({{kT}, {kX, kY, kZ, kW}}, {grevlex(1), grevlex(4)});
}

TermOrder TermOrder::parse(const std::string& text) {
  if (text == "lex") return lex();
  if (text == "grevlex") return grevlex();
  if (text.rfind("weight(", 0) == 0 && text.back() == ')') {
    std::vector<long> w;
    std::stringstream in(text.substr(7, text.size() - 8));
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        w.push_back(std::stol(item));
      } catch (const std::exception&) {
        throw DomainError("malformed weight '" + item + "'");
      }
    }
    if (w.size() != kNumVars) throw DomainError("weight order needs 4 weights");
    return weight_refined(WeightVector(w));
  }
  throw DomainError("unknown term order '" + text + "'");
}

}  // namespace flatlim
