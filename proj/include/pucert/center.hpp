#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "pucert/census.hpp"
#include "pucert/fusion_ring.hpp"

namespace pucert {

// multiplicities of the simples in F(I(X_j)) = sum_Y Y (x) X_j (x) Y*
std::array<int, 6> induction_image(const FusionRing& ring, int j);

// Orbit-count vector (o_0..o_8): number of dimensional Galois orbits of each
// table type; o_0 = 1 and o_4 = 3 always.
struct OrbitVector {
    std::array<int, 9> o{};
    int rank() const;
    bool operator==(const OrbitVector& v) const { return o == v.o; }
    bool operator<(const OrbitVector& v) const { return o < v.o; }
};

// 29 multiplicity slots (label, mult) in the fixed layout: labels
// 1,2,3,4,5,7,9,10,11,12,13,18,19,20 with mult running 1..m125(label).
inline constexpr int kSlotCount = 29;
using MultVector = std::array<int, kSlotCount>;

struct Slot {
    int label;
    int mult;
};

struct ConstraintData {
    std::array<Slot, kSlotCount> slots;
    std::array<int, 9> ir33{}, ir44{};         // per-orbit sums of m3^2 / m4^2
    std::array<std::array<int, kSlotCount>, 4> K{};  // rows for [X_j], [X_j'+X_j''], [X_3], [X_4]
    std::array<int, 4> rhs{};                  // (15, 12, 12, 15)
    int slot_of(int label, int mult) const;
};

// Derived from the profile table alone; the induction images supply the rhs.
ConstraintData derive_constraint_matrices(const Figure3& fig, const FusionRing& ring);

// Exact squared-dimension budget B and the per-orbit squared sums used for
// the enumeration bounds; floors are certified.
struct OrbitBudget {
    Cyc budget;                      // 81 u2^4 minus the forced orbits
    std::array<Cyc, 9> orbit_sums;   // sum of squared dims per orbit type (types 0 and 4 unused)
    std::array<long, 9> floors{};    // floor(B / orbit_sum) for the free types
};
OrbitBudget orbit_budget(const Figure3& fig, CertifiedSignContext& ctx);

// all (1, o1, o2, o3, 3, o5, o6, o7, o8) within the certified bounds with
// ir33 . o == [X3, F(I(X3))] and ir44 . o == [X4, F(I(X4))]
std::vector<OrbitVector> enumerate_orbit_vectors(const ConstraintData& cd, const OrbitBudget& ob,
                                                 const FusionRing& ring);

// per-component candidates: capacities per label group, the orbit-0 budget
// (weighted label-1/label-2/label-12 counts == 3) and K . n == rhs
std::vector<MultVector> enumerate_component_vectors(const OrbitVector& o, const ConstraintData& cd);

struct Triple {
    MultVector x, y, z;  // ordered x >= y >= z lexicographically
};

// triples satisfying the per-orbit consistency equalities on s = x + y + z
std::vector<Triple> enumerate_triplets(const OrbitVector& o, const std::vector<MultVector>& cands,
                                       const ConstraintData& cd);

enum class NoteCheck { verified, warning };

// each component must report exactly one label-1 simple and one label-2
// simple at multiplicity 1 (the forced decompositions of the codegree objects)
NoteCheck note_assumption_check(const Triple& t, const ConstraintData& cd);

// conjunction of the four structure lemmas, applied per component and across
// components; `literal` follows the reference filter's branch layout instead
// of the lemma statements (used by the audit diff)
bool lemma_filters(const OrbitVector& o, const Triple& t, const ConstraintData& cd,
                   bool literal = false);

struct CenterSolution {
    OrbitVector o;
    Triple t;
    int rank = 0;
    bool note_warning = false;
};

struct PerOrbitCount {
    OrbitVector o;
    long candidates = 0;
    long triples = 0;
    long survivors = 0;
    bool searched = false;  // false when skipped in smoke mode
};

struct CenterAudit {
    bool ran = false;
    long assignment_only_triples = 0;  // admitted by the assignment model, not by the equalities
    long equalities_only_triples = 0;  // admitted by the equalities, not by the assignment model
    long lemma_variant_diffs = 0;      // statement filter vs literal filter disagreements
};

struct CenterOptions {
    int jobs = 1;
    bool smoke = false;
    int smoke_limit = 6;  // number of orbit vectors searched in smoke mode
    bool audit = false;
};

struct CenterOutcome {
    ConstraintData cd;
    OrbitBudget budget;
    std::vector<OrbitVector> orbit_vectors;
    std::vector<PerOrbitCount> per_orbit;
    std::vector<CenterSolution> solutions;
    long total_triples = 0;
    long warnings = 0;
    bool complete = false;  // full search (not smoke)
    CenterAudit audit;
};

CenterOutcome run_center_search(const Figure3& fig, const FusionRing& ring,
                                const CenterOptions& opts, CertifiedSignContext& ctx);

// forgetful-image column: multiplicities of (X0, X1, X2, X3, X4, X5)
using Profile = std::array<int, 6>;

struct LabeledColumn {
    int orbit;
    int label;
    Profile profile;
    int count;
};

// Per-simple forgetful images of a solution, with the triple components
// assigned to X1, X2, X5 in order.  Pattern reconstruction from the
// multiplicity marginals is unique once the consistency equalities hold.
std::vector<LabeledColumn> reconstruct_columns(const CenterSolution& sol, const Figure3& fig,
                                               const ConstraintData& cd);

struct Figure2 {
    std::vector<LabeledColumn> columns;  // canonical order: block, label, profile desc
    int column_count() const;
};

Figure2 emit_center_table(const CenterSolution& sol, const Figure3& fig, const ConstraintData& cd);

std::string figure2_tsv(const Figure2& f);

struct Cover {
    std::vector<std::pair<Profile, int>> parts;  // profile -> multiplicity
};

struct EliminationReport {
    bool applicable = false;
    int special_component = -1;    // component index with the 15-summand induction image
    int summand_count = 0;
    Profile derived_target{};      // ring product F(X (x) Z_j), component-exact
    Profile recorded_target{};     // the recorded reference profile for this step
    bool targets_agree = false;
    int candidate_profiles = 0;
    std::vector<Cover> derived_covers;    // covers found at the derived target
    std::vector<Cover> recorded_covers;   // covers found at the recorded target
    long nodes_derived = 0, nodes_recorded = 0;
    bool recorded_infeasible = false;     // the recorded elimination step reproduces
};

// Mechanizes the final fusion-argument step on the 15-summand solution: a
// multiset-cover search for F(X (x) Z_j) over the solution's distinct
// forgetful images (restricted to admissible summands), run against both the
// ring-derived product and the recorded reference profile.  Both component
// orientations of the two non-special columns are searched; reported covers
// are from the first orientation.
EliminationReport eliminate_rank24(const CenterSolution& sol, const Figure3& fig,
                                   const ConstraintData& cd, const FusionRing& ring,
                                   const Profile& recorded_target);

struct SubcategoryReport {
    bool ok = false;
    std::array<bool, 6> assignment_match{};  // per permutation of (X1, X2, X5)
    bool table_matches_ring = false;         // under the standard assignment
    bool profiles_consistent = false;
    bool objects_available = false;
    std::array<int, 4> hom_counts{};         // expects (2, 3, 4, 3)
    std::string failure;
};

// checks the six-object closure table against the ring and the survivor
SubcategoryReport verify_subcategory(const CenterSolution& sol, const Figure3& fig,
                                     const ConstraintData& cd, const FusionRing& ring);

}  // namespace pucert
