// Copyright 2026 The bks Authors
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

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "bks/proofs.h"
#include "bks/ray.h"

namespace bks {

/// Malformed or inconsistent input file.
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

nlohmann::json catalog_to_json(const RayCatalog &catalog);
RayCatalog catalog_from_json(const nlohmann::json &j);

nlohmann::json bases_to_json(const RayCatalog &catalog, const std::vector<Basis> &bases);
std::vector<Basis> bases_from_json(const nlohmann::json &j, const RayCatalog &catalog);

nlohmann::json proof_to_json(const RayCatalog &catalog, const ProofSet &proof);

struct LoadedProof {
    RayCatalog catalog;
    ProofSet proof;
};

/// Resolves the catalog by name and checks every basis against it; stated v
/// and l must match the bases.
LoadedProof proof_from_json(const nlohmann::json &j);

nlohmann::json read_json_file(const std::string &path);

}  // namespace bks
