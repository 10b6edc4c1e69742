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

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bks/gf2.h"
#include "bks/metric.h"
#include "bks/ray.h"

namespace bks {

class CapacityError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class ClassificationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Ray x basis membership over GF(2) for a catalog and a numbered basis list
/// (basis id k+1 is bases()[k]).
class IncidenceStructure {
   public:
    IncidenceStructure(RayCatalog catalog, std::vector<Basis> bases);

    /// All bases of the catalog in numbered_bases() order.
    static IncidenceStructure for_catalog(const RayCatalog &catalog);

    const RayCatalog &catalog() const {
        return catalog_;
    }
    const std::vector<Basis> &bases() const {
        return bases_;
    }
    const Basis &basis(int id) const;
    std::optional<int> find_basis(const Basis &basis) const;
    /// Rows are rays (row k is ray id k+1), columns are bases.
    const BitMatrix &matrix() const {
        return matrix_;
    }

   private:
    RayCatalog catalog_;
    std::vector<Basis> bases_;
    std::map<Basis, int> index_;
    BitMatrix matrix_;
};

struct ProofFlags {
    bool parity = false;
    bool bks_verified = false;
    bool ray_critical = false;
    bool basis_critical = false;
};

/// A set of bases, optionally tied to basis ids of an incidence structure.
struct ProofSet {
    std::vector<int> basis_ids;  // sorted; empty when only ray sets are known
    std::vector<Basis> bases;
    int v = 0;
    int l = 0;
    ProofFlags flags;
    std::string subtype;

    /// "v-l" followed by the subtype, e.g. "20-11A".
    std::string type() const;
    std::vector<int> ray_ids() const;
};

/// Computes v, l and the parity flag.
ProofSet make_proof(std::vector<Basis> bases);
ProofSet make_proof(const IncidenceStructure &inc, std::vector<int> basis_ids);

/// Odd number of bases and every ray used an even number of times.
bool is_parity_proof(const ProofSet &proof);

/// Generators of the GF(2) null space of the incidence matrix, as indicator
/// vectors over the bases.
std::vector<Bits> kernel_gf2(const IncidenceStructure &inc);

/// Every odd-weight kernel vector as a ProofSet, sorted by (l, basis ids).
/// Throws CapacityError if the kernel dimension exceeds max_dim.
std::vector<ProofSet> enumerate_parity_proofs(const IncidenceStructure &inc, int max_dim = 24);

/// Assigns subtypes from distance-histogram signatures (table built over
/// inc.bases()) and returns counts keyed by ProofSet::type(). Proofs need
/// basis ids.
std::map<std::string, long> classify(std::vector<ProofSet> &proofs, const DistanceTable &table, int dimension);

/// Histogram of a proof with basis ids against a table over the same bases.
Histogram proof_histogram(const ProofSet &proof, const DistanceTable &table);

/// True iff some odd-weight vector lies in the kernel, decided by a rank
/// test: the all-ones vector is not in the row space.
bool odd_kernel_exists(const IncidenceStructure &inc);

/// Proofs from fixture tables.
ProofSet magic_square9_proof(const IncidenceStructure &inc2q);
std::vector<ProofSet> magic_square_proofs(const IncidenceStructure &inc2q);
std::vector<ProofSet> pentagram_proofs(const IncidenceStructure &inc3q);
/// "80-21", "80-22", "80-23" or "eleven".
ProofSet reference_proof(const std::string &name);

}  // namespace bks
