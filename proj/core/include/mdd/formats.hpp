// Copyright 2026 The mdd Authors
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

#pragma once

// JSON documents: {"schema_version": 1, "kind": ..., "payload": ...}.
// Output is canonical: sorted keys, sorted item arrays, reduced fractions.

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "mdd/games.hpp"
#include "mdd/reduction.hpp"
#include "mdd/solvers.hpp"
#include "mdd/valuation.hpp"

namespace mdd {

inline constexpr int kSchemaVersion = 1;

enum class FormatErrorKind { kParse, kSchema, kSemantic };

/// Carries a JSON pointer to the offending field.
class FormatError : public std::runtime_error {
 public:
  FormatError(FormatErrorKind kind, std::string path, const std::string& message);
  FormatErrorKind kind() const { return kind_; }
  const std::string& path() const { return path_; }

 private:
  FormatErrorKind kind_;
  std::string path_;
};

struct OdpInstance {
  Valuation v;
  Valuation w;
};

/// Named result record; `body` is a canonical JSON object text.
struct Report {
  std::string name;
  std::string body;
};

using Payload = std::variant<Valuation, TypeDistribution, SADPInstance, Menu, CompatibilityWitness,
                             GameTranscript, OdpInstance, Report>;

struct Document {
  Payload payload;
};

/// "valuation", "distribution", "sadp-instance", "menu", "witness",
/// "transcript", "odp-instance" or "report".
std::string kind_of(const Document& doc);

Document load_document(std::string_view bytes, std::size_t cap = kDefaultEnumCap);
std::string save_document(const Document& doc);

Document read_document(const std::filesystem::path& path, std::size_t cap = kDefaultEnumCap);
/// Temp file in the same directory, then rename.
void write_atomically(const std::filesystem::path& path, std::string_view bytes);

Report report_of(const OdpResult& r, const Valuation& v, const Valuation& w);
Report report_of(const ReductionReport& r);
Report report_of(const ReductionBundle& b);
Report report_of(const Recovery& r);
Report report_of(const SadpEvaluation& e);
Report report_of(const CCompatibilityReport& r);
Report report_of(const PropertyReport& r);
Report report_of(const AxiomReport& r);
Report report_of(const MenuResiduals& r);
Report report_of(const MenuSolution& s);
Report report_of(const TrivialBundle& b);
Report report_of(const HardnessBudget& b);
Report quality_report(const Rational& alpha, const Rational& d, std::size_t k, const Rational& q);

}  // namespace mdd
