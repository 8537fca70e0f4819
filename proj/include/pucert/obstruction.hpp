#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pucert/fusion_ring.hpp"

namespace pucert {

// Normalized twist candidate for the rank-6 ring.  Every entry is a ninth
// root of unity stored by exponent; t[0] determines t[3], t[4] through the
// squared Galois action, and theta_j = t_j / t_0 (so theta[0] = 1 and the
// central-charge cube root is gamma = t_0^{-1}).
struct TwistTuple {
    std::array<int, 6> t_exp{};      // exponents of t_j
    std::array<int, 6> theta_exp{};  // exponents of theta_j, theta_exp[0] == 0

    Cyc theta(int j) const { return Cyc::zeta(theta_exp[j]); }
    Cyc gamma() const { return Cyc::zeta((9 - t_exp[0] % 9) % 9); }

    bool operator==(const TwistTuple& o) const { return theta_exp == o.theta_exp; }
};

// The 297 candidates: 9 Galois-coherent (t0,t3,t4) triples crossed with 6
// coherent primitive (t1,t2,t5) triples plus 27 all-cube-root triples.
std::vector<TwistTuple> enumerate_twist_tuples();

// Audit mode: scan all 9^6 exponent tuples with the coherence predicate and
// normalize; must reproduce enumerate_twist_tuples() as a multiset.
std::vector<TwistTuple> enumerate_twist_tuples_fullspace();

// Keeps tuples whose Gauss sum g = sum d_j^2 theta_j satisfies
// g * conj(g) == sum d_j^2 exactly, deduplicated by normalized tuple and
// canonically sorted (coordinate order of the theta vectors).
std::vector<TwistTuple> gauss_filter(const std::vector<TwistTuple>& tuples, const DimVector& d);

using SMatrix = std::array<std::array<Cyc, 6>, 6>;

// S[i][j] = theta_i^{-1} theta_j^{-1} sum_k N[i][j][k] d_k theta_k
SMatrix balancing_s_matrix(const TwistTuple& t, const DimVector& d, const FusionRing& ring);

struct VerlindeMismatch {
    int i, j, k;
    Cyc computed;
    int expected;
};

struct VerlindeResult {
    bool structural_failure = false;  // some S[0][l] == 0
    std::vector<VerlindeMismatch> mismatches;
};

// Evaluates (1/total) * sum_l S[i][l] S[j][l] S[k][l] / S[0][l] for all
// triples and collects every disagreement with the structure constants.
VerlindeResult verlinde_residuals(const SMatrix& s, const FusionRing& ring, const DimVector& d);

struct ObstructionReport {
    bool applicable = false;
    bool ran = false;
    std::string skip_reason;
    int tuple_count = 0;
    int survivor_count = 0;
    std::vector<TwistTuple> survivors;
    std::vector<int> mismatch_counts;          // per survivor
    std::vector<VerlindeMismatch> witnesses;   // the (1,1,1) witness per survivor
    bool certified = false;                    // every survivor has a Verlinde failure
    bool audit_fullspace_ok = false;           // only meaningful when audit was requested
    bool audit_ran = false;
};

struct ObstructionOptions {
    bool audit_fullspace = false;
};

// Stage 1: refuses rings other than the built-in one (the twist family is
// specific to it); a rank-1 ring passes vacuously and is marked inapplicable.
// Throws std::invalid_argument when the supplied dimension vector is not a
// dimension homomorphism of the ring.
ObstructionReport run_obstruction(const FusionRing& ring, const DimVector& d,
                                  const ObstructionOptions& opts = {});

}  // namespace pucert
