// Copyright 2026 The rsgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "json.hpp"
#include "rsgraph/bounds.hpp"
#include "rsgraph/expansion_audit.hpp"
#include "rsgraph/search.hpp"
#include "rsgraph/verify.hpp"

namespace rsgraph {

// Machine-readable reports emitted by `rsg ... --json`. Every document
// carries "kind" and "schema_version"; exact rationals are strings such as
// "9/5" accompanied by a "<name>_approx" double.
inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const AuditReport& report);
nlohmann::json to_json(const BoundVerdict& verdict);
nlohmann::json to_json(const DistanceCertificate& cert);
// The certificate is embedded as its canonical .rsg text.
nlohmann::json to_json(const SearchOutcome& outcome);

}  // namespace rsgraph
