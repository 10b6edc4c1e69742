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

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bks/rational.h"

namespace bks {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// i^phase * (X^x_1 Z^z_1) (x) ... (x) (X^x_n Z^z_n).
///
/// Qubit k (1-based) is stored in bit n-k of the masks, so the masks act
/// directly on computational-basis indices with qubit 1 most significant.
/// With this convention Y = i XZ, so a text "Y" contributes one unit of
/// phase.
struct PauliOperator {
    int num_qubits = 1;
    std::uint32_t xs = 0;
    std::uint32_t zs = 0;
    std::uint8_t phase = 0;

    static PauliOperator identity(int num_qubits);
    /// Parses strings like "ZXZX", "-XXXX", "+YY", "iZ" (one letter per qubit).
    static PauliOperator from_text(std::string_view text);
    /// Single-qubit operator ('X', 'Y' or 'Z') at 1-based position qubit.
    static PauliOperator single(int num_qubits, int qubit, char letter);

    bool x_at(int qubit) const;
    bool z_at(int qubit) const;

    bool is_identity() const {
        return xs == 0 && zs == 0 && phase == 0;
    }
    /// Identity up to a phase.
    bool is_scalar() const {
        return xs == 0 && zs == 0;
    }
    bool is_real() const {
        return phase % 2 == 0;
    }
    /// Same tensor factors, ignoring the phase.
    bool same_up_to_phase(const PauliOperator &other) const {
        return num_qubits == other.num_qubits && xs == other.xs && zs == other.zs;
    }

    std::string str() const;

    bool operator==(const PauliOperator &other) const = default;
};

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);
PauliOperator operator*(const PauliOperator &p, const PauliOperator &q);
bool commutes(const PauliOperator &p, const PauliOperator &q);

/// Exact 2^n x 2^n signed permutation matrix. Throws std::domain_error for
/// non-real operators.
IntMatrix matrix(const PauliOperator &p);

/// Non-identity elements (phase dropped) of the group generated by ops,
/// sorted by (xs, zs). Throws std::invalid_argument if ops do not commute.
std::vector<PauliOperator> closure(std::span<const PauliOperator> ops);

/// The 2^n joint eigenvectors of a maximal set of commuting real operators,
/// as canonical primitive integer rays. Each operator splits every current
/// eigenspace with the integer projectors (I + O) and (I - O), in input
/// order. Throws std::invalid_argument for non-commuting or non-real input
/// and DegeneracyError when an eigenspace of dimension > 1 remains.
class DegeneracyError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};
std::vector<std::vector<std::int64_t>> joint_eigenbasis(std::span<const PauliOperator> ops);

/// prod_{i=1..n} (1 + 2^i): number of maximal commuting sets.
Integer count_max_commuting(int num_qubits);
/// prod_{i=1..n} (2 + 2^i): number of real joint eigenstates.
Integer count_real_rays(int num_qubits);

/// Operator configuration whose contexts are sets of commuting operators.
struct MagicConfiguration {
    std::string label;
    int num_qubits = 0;
    std::vector<std::vector<PauliOperator>> contexts;
};

/// "square2q", "pentagram3q" or "rectangle4q".
MagicConfiguration magic_configuration(std::string_view label);

struct MagicReport {
    std::vector<int> signs;  // +1 / -1 per context
    bool parity_obstruction = false;
};

/// Throws std::invalid_argument if a context is not commuting or its product
/// is not +-identity.
MagicReport verify_magic(const MagicConfiguration &config);

}  // namespace bks
