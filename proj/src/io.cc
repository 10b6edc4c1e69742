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

#include "bks/io.h"

#include <algorithm>
#include <fstream>

namespace bks {

namespace {

using nlohmann::json;

template <typename T>
T field(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw InputError(std::string("missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw InputError(std::string("field '") + key + "': " + e.what());
    }
}

}  // namespace

json catalog_to_json(const RayCatalog &catalog) {
    json rays = json::array();
    for (const Ray &r : catalog.rays()) {
        rays.push_back(r.coords);
    }
    return json{{"n", catalog.num_qubits()}, {"rays", rays}};
}

RayCatalog catalog_from_json(const json &j) {
    auto n = field<int>(j, "n");
    auto rays = field<std::vector<std::vector<Coord>>>(j, "rays");
    try {
        return RayCatalog(n, rays, CatalogSource::generated);
    } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
    }
}

json bases_to_json(const RayCatalog &catalog, const std::vector<Basis> &bases) {
    json list = json::array();
    for (const Basis &b : bases) {
        list.push_back(b.ray_ids);
    }
    return json{{"catalog", catalog.name()}, {"bases", list}};
}

std::vector<Basis> bases_from_json(const json &j, const RayCatalog &catalog) {
    auto lists = field<std::vector<std::vector<int>>>(j, "bases");
    std::vector<Basis> out;
    for (auto &ids : lists) {
        try {
            Basis b(std::move(ids));
            validate_basis(b, catalog);
            out.push_back(std::move(b));
        } catch (const std::logic_error &e) {
            throw InputError(e.what());
        }
    }
    return out;
}

json proof_to_json(const RayCatalog &catalog, const ProofSet &proof) {
    json j = bases_to_json(catalog, proof.bases);
    j["v"] = proof.v;
    j["l"] = proof.l;
    j["flags"] = json{{"parity", proof.flags.parity},
                      {"bks_verified", proof.flags.bks_verified},
                      {"ray_critical", proof.flags.ray_critical},
                      {"basis_critical", proof.flags.basis_critical}};
    if (!proof.basis_ids.empty()) {
        j["basis_ids"] = proof.basis_ids;
    }
    if (!proof.subtype.empty()) {
        j["type"] = proof.type();
    }
    return j;
}

LoadedProof proof_from_json(const json &j) {
    auto name = field<std::string>(j, "catalog");
    RayCatalog catalog = [&] {
        try {
            return catalog_by_name(name);
        } catch (const std::invalid_argument &e) {
            throw InputError(e.what());
        }
    }();
    std::vector<Basis> bases = bases_from_json(j, catalog);
    if (bases.empty()) {
        throw InputError("proof has no bases");
    }
    std::vector<Basis> sorted = bases;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("proof lists a basis twice");
    }
    ProofSet proof = make_proof(std::move(bases));
    if (j.contains("v") && field<int>(j, "v") != proof.v) {
        throw InputError("stated v does not match the bases");
    }
    if (j.contains("l") && field<int>(j, "l") != proof.l) {
        throw InputError("stated l does not match the bases");
    }
    return LoadedProof{std::move(catalog), std::move(proof)};
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw InputError(path + ": " + e.what());
    }
}

}  // namespace bks
