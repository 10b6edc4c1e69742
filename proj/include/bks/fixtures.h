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

#include <vector>

/// Reference ray, basis and proof tables for the 2-, 3- and 4-qubit systems.
/// All ids are 1-based.
namespace bks::fixtures {

/// Integer ray coordinates; row k is ray id k+1. Supported: 2, 3, 4 qubits.
const std::vector<std::vector<int>> &ray_table(int num_qubits);

/// Bases as ray-id sets in reference numbering (row k is basis id k+1).
/// Supported: 2 and 3 qubits.
const std::vector<std::vector<int>> &basis_table(int num_qubits);

/// The 16 proofs of type 18-9 in their 4x4 square arrangement (row-major),
/// each given as 9 basis ids of the 2-qubit system.
const std::vector<std::vector<int>> &magic_square_proofs();
const std::vector<int> &magic_square_indices();

/// The 18-9 proof drawn as a 3x3 crossing diagram (upper-left of the square).
std::vector<int> magic_square9_bases();

/// The 16 proofs of type 36-11 that contain 3-qubit bases 1, 2 and 3.
const std::vector<std::vector<int>> &pentagram_proofs();

/// First proof of pentagram_proofs() spelled out as 8-ray sets.
const std::vector<std::vector<int>> &eleven_bases();

/// 4-qubit proofs 80-21, 80-22, 80-23 as explicit 16-ray sets.
std::vector<std::vector<int>> four_qubit_proof(int num_bases);
const std::vector<std::vector<int>> &four_qubit_extensions();

}  // namespace bks::fixtures
