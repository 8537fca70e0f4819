#pragma once

#include <array>
#include <string>
#include <vector>

#include "pucert/cyclotomic.hpp"

namespace pucert {

// Totally positive d-number 3^a (u1^b u2^c)^2 beta^d of norm a power of 3;
// the exponent d is kept in {0,1,2} (beta^3 = 3 u1^2 u2^2 absorbs the rest).
// These are the candidate squared dimensions.
struct DNumber {
    int a = 0, b = 0, c = 0, d = 0;

    Cyc value() const;
    // exact square root when a == d  (mod 2), using sqrt(3 beta) = u1^-1 u2^-1 beta^2
    Cyc sqrt_value() const;

    bool operator==(const DNumber& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool operator<(const DNumber& o) const {
        return std::array<int, 4>{a, b, c, d} < std::array<int, 4>{o.a, o.b, o.c, o.d};
    }
};

// true iff sign * u1^x * u2^y is totally positive, decided by the parity rule
// (sign +, x and y even) and independently by certified signs at the three
// embeddings; disagreement between the two routes throws std::logic_error.
bool totally_positive_unit_classify(int sign, int x, int y, CertifiedSignContext& ctx);

// the algebraic Galois orbit: exponent images verified against the actual
// automorphism on values (mismatch throws std::logic_error)
std::array<DNumber, 3> orbit_conjugates(const DNumber& n);

// maximal among its own Galois conjugates under the identity embedding
bool is_orbit_max(const DNumber& n, CertifiedSignContext& ctx);

// a == d (mod 2)
bool is_perfect_square(const DNumber& n);

// the dimensional Galois orbit of a squared dimension (normalized by the
// global-dimension ratio): exponent maps (b,c) -> (2-(b+c+d), b+2) and
// (b,c) -> (c-2, 4-(b+c+d))
std::array<DNumber, 3> dimensional_orbit(const DNumber& n);

// Scan a in [0,4], b in [-2,4], c in [0,6], d in {0,1,2} with a == d (mod 2):
// keep quadruples whose full dimensional orbit consists of orbit-maximal
// values with orbit max < 3938 and orbit min > 49 (bounds certified).
std::vector<DNumber> enumerate_candidate_squared_dims(CertifiedSignContext& ctx);

// Dimensions x*u2 + y*u1*u2 + z*u1^-1*u2^2 for x,y,z in {0,1,2} whose norm is
// +-3^n, sorted by value; complete for every dimension below 7.
struct SmallDim {
    std::array<int, 3> xyz;
    Cyc value;
    Rat norm;
};
std::vector<SmallDim> small_dim_scan(CertifiedSignContext& ctx);

// dimension in the factored form 3^p3 * u1^e1 * u2^e2 * beta^e3, e3 in {0,1,2}
struct DimFact {
    int p3 = 0, e1 = 0, e2 = 0, e3 = 0;
    Cyc value() const;
    std::string str() const;
    bool operator==(const DimFact& o) const {
        return p3 == o.p3 && e1 == o.e1 && e2 == o.e2 && e3 == o.e3;
    }
};

// factored square root of a perfect-square DNumber
DimFact dim_fact_sqrt(const DNumber& n);

struct ProfileRow {
    int label = 0;
    int orbit = 0;
    DimFact dim;
    int m0 = 0, m125 = 0, m3 = 0, m4 = 0;
    bool operator==(const ProfileRow& o) const {
        return label == o.label && orbit == o.orbit && dim == o.dim && m0 == o.m0 &&
               m125 == o.m125 && m3 == o.m3 && m4 == o.m4;
    }
};

struct Figure3 {
    std::vector<ProfileRow> rows;  // 21 rows, labels 0..20, orbits 0..8
    const ProfileRow& by_label(int label) const { return rows.at(label); }
    int orbit_count() const;
};

// All (m0, x, y, z) with m0 + x*u2 + y*u1*u2 + z*u1^-1*u2^2 == dim exactly,
// m0 = 1 permitted only when allow_m0; bounds come from certified floors.
std::vector<std::array<int, 4>> profile_solutions(const Cyc& dim, bool allow_m0,
                                                  CertifiedSignContext& ctx);

// Assembles the 21-row candidate table: the unit orbit and the codegree
// orbit supply the rows carrying the tensor unit; the small-dimension scan
// and the bounded exponent scan supply the rest.  Each row's profile must be
// unique in its class, otherwise std::logic_error is thrown.
Figure3 build_figure3(CertifiedSignContext& ctx);

// tsv rendering used for the golden fixture (header line + 21 rows)
std::string figure3_tsv(const Figure3& f);

}  // namespace pucert
