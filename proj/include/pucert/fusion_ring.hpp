#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pucert/cyclotomic.hpp"

namespace pucert {

// Based ring with nonnegative integer structure constants N[i][j][k], a unit
// at index 0 and an involutive duality permutation.  All rings in this
// pipeline are commutative.
struct FusionRing {
    int rank = 0;
    std::vector<std::string> labels;
    std::vector<int> n;     // rank^3 entries, row-major (i, j, k)
    std::vector<int> dual;  // involutive permutation, dual[0] == 0

    int N(int i, int j, int k) const { return n[(static_cast<size_t>(i) * rank + j) * rank + k]; }
    int& N(int i, int j, int k) { return n[(static_cast<size_t>(i) * rank + j) * rank + k]; }

    // multiplication of multiplicity vectors in the ring
    std::vector<int> mul(const std::vector<int>& u, const std::vector<int>& v) const;

    bool operator==(const FusionRing& o) const { return rank == o.rank && n == o.n && dual == o.dual; }
};

struct Violation {
    std::string axiom;      // "unit", "assoc", "dual", "comm", "nonneg"
    std::vector<int> index;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// checks unit, associativity, duality and commutativity axioms; violations
// are reported as data, not thrown
ValidationReport validate(const FusionRing& ring);

// the built-in rank-6 ring; construction re-validates the table and throws
// std::logic_error if any axiom fails
const FusionRing& builtin_R();

FusionRing trivial_ring();

// Deligne-product ring: rank(A)*rank(B), structure constants multiply
// componentwise; throws std::invalid_argument if either input is invalid.
FusionRing product_ring(const FusionRing& a, const FusionRing& b);

using DimVector = std::vector<Cyc>;

// does d_i * d_j == sum_k N[i][j][k] d_k hold exactly for all i, j?
bool check_dim_hom(const FusionRing& ring, const DimVector& d);

struct FpData {
    DimVector dims;   // (1, u2, u2, u1*u2, u1^-1*u2^2, u2)
    Cyc total;        // sum of squares, equals 9*u2^2
};

// the verified positive dimension character of the built-in ring; throws
// std::logic_error if verification fails
FpData fpdim_data_R();

struct CodegreeData {
    std::vector<Cyc> codegrees;    // total / d_i^2 per simple
    std::vector<Cyc> center_dims;  // total / codegree_i, the induced center-object dimensions
};

CodegreeData formal_codegrees_R();

// Permutation induced on simples by a Galois automorphism acting on squared
// dimensions, normalized by the global-dimension ratio:
//   target_i = g(d_i^2) * total / g(total).
// Simples sharing a squared dimension form one class; image[i] lists the
// simples carrying target_i.  Throws std::domain_error when some target
// matches no simple.
struct DimClassPerm {
    std::vector<std::vector<int>> image;
    bool fixes(int i) const;
};

DimClassPerm galois_perm_on_simples(const FusionRing& ring, const DimVector& d,
                                    const Automorphism& g);

// Text format: line "rank r"; line "dual p0 ... p_{r-1}"; then r blocks of r
// lines of r integers; '#' starts a comment.
FusionRing read_fring(std::istream& in);
void write_fring(std::ostream& out, const FusionRing& ring);

}  // namespace pucert
