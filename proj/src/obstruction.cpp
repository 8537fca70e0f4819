#include "pucert/obstruction.hpp"

#include <algorithm>

namespace pucert {

namespace {

TwistTuple make_tuple(const std::array<int, 6>& t) {
    TwistTuple tt;
    tt.t_exp = t;
    for (int j = 0; j < 6; ++j) tt.theta_exp[j] = ((t[j] - t[0]) % 9 + 9) % 9;
    return tt;
}

// (e, 7e, 4e): image chain of t0 under the square of the full generator
std::array<int, 3> coherent_triple(int e) {
    return {e % 9, (7 * e) % 9, (4 * e) % 9};
}

bool is_primitive(int e) { return e % 3 != 0; }

}  // namespace

std::vector<TwistTuple> enumerate_twist_tuples() {
    std::vector<std::array<int, 3>> t125;
    for (int b : {1, 2, 4, 5, 7, 8}) t125.push_back(coherent_triple(b));
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z) t125.push_back({3 * x, 3 * y, 3 * z});
    std::vector<TwistTuple> out;
    out.reserve(9 * t125.size());
    for (int e = 0; e < 9; ++e) {
        auto c = coherent_triple(e);
        for (const auto& y : t125)
            out.push_back(make_tuple({c[0], y[0], y[1], c[1], c[2], y[2]}));
    }
    return out;
}

std::vector<TwistTuple> enumerate_twist_tuples_fullspace() {
    std::vector<TwistTuple> out;
    std::array<int, 6> t{};
    for (t[0] = 0; t[0] < 9; ++t[0])
        for (t[1] = 0; t[1] < 9; ++t[1])
            for (t[2] = 0; t[2] < 9; ++t[2])
                for (t[3] = 0; t[3] < 9; ++t[3])
                    for (t[4] = 0; t[4] < 9; ++t[4])
                        for (t[5] = 0; t[5] < 9; ++t[5]) {
                            if (t[3] != (7 * t[0]) % 9 || t[4] != (4 * t[0]) % 9) continue;
                            bool cube = t[1] % 3 == 0 && t[2] % 3 == 0 && t[5] % 3 == 0;
                            bool prim = is_primitive(t[1]) && t[2] == (7 * t[1]) % 9 &&
                                        t[5] == (4 * t[1]) % 9;
                            if (!cube && !prim) continue;
                            out.push_back(make_tuple(t));
                        }
    return out;
}

std::vector<TwistTuple> gauss_filter(const std::vector<TwistTuple>& tuples, const DimVector& d) {
    Cyc total;
    for (const Cyc& x : d) total += x * x;
    std::vector<TwistTuple> survivors;
    for (const TwistTuple& t : tuples) {
        Cyc g;
        for (int j = 0; j < 6; ++j) g += d[j] * d[j] * t.theta(j);
        if (g * g.conj() == total) survivors.push_back(t);
    }
    auto key = [](const TwistTuple& t) {
        std::array<Cyc, 6> v;
        for (int j = 0; j < 6; ++j) v[j] = t.theta(j);
        return v;
    };
    std::sort(survivors.begin(), survivors.end(), [&](const TwistTuple& a, const TwistTuple& b) {
        auto ka = key(a), kb = key(b);
        for (int j = 0; j < 6; ++j) {
            int c = Cyc::cmp_coords(ka[j], kb[j]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    survivors.erase(std::unique(survivors.begin(), survivors.end()), survivors.end());
    return survivors;
}

SMatrix balancing_s_matrix(const TwistTuple& t, const DimVector& d, const FusionRing& ring) {
    SMatrix s;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            Cyc acc;
            for (int k = 0; k < 6; ++k) {
                int m = ring.N(i, j, k);
                if (m) acc += Cyc::integer(m) * d[k] * t.theta(k);
            }
            // theta_i^{-1} theta_j^{-1} as zeta powers
            s[i][j] = Cyc::zeta(-(t.theta_exp[i] + t.theta_exp[j])) * acc;
        }
    return s;
}

VerlindeResult verlinde_residuals(const SMatrix& s, const FusionRing& ring, const DimVector& d) {
    VerlindeResult res;
    Cyc total;
    for (const Cyc& x : d) total += x * x;
    std::array<Cyc, 6> col_inv;
    for (int l = 0; l < 6; ++l) {
        if (s[0][l].is_zero()) {
            res.structural_failure = true;
            return res;
        }
        col_inv[l] = s[0][l].inverse();
    }
    Cyc total_inv = total.inverse();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (int k = 0; k < 6; ++k) {
                Cyc acc;
                for (int l = 0; l < 6; ++l) acc += s[i][l] * s[j][l] * s[k][l] * col_inv[l];
                Cyc v = total_inv * acc;
                if (v != Cyc::integer(ring.N(i, j, k)))
                    res.mismatches.push_back({i, j, k, v, ring.N(i, j, k)});
            }
    return res;
}

ObstructionReport run_obstruction(const FusionRing& ring, const DimVector& d,
                                  const ObstructionOptions& opts) {
    ObstructionReport rep;
    if (!check_dim_hom(ring, d))
        throw std::invalid_argument("run_obstruction: dimension homomorphism check failed");
    if (ring.rank == 1) {
        // S = (1); the Verlinde identity holds vacuously
        rep.applicable = false;
        rep.ran = true;
        rep.skip_reason = "rank-1 ring: stage holds vacuously";
        rep.certified = false;
        return rep;
    }
    if (!(ring == builtin_R())) {
        rep.applicable = false;
        rep.skip_reason = "stage is specific to the built-in rank-6 ring";
        return rep;
    }
    rep.applicable = true;
    rep.ran = true;
    auto tuples = enumerate_twist_tuples();
    rep.tuple_count = static_cast<int>(tuples.size());
    if (opts.audit_fullspace) {
        auto full = enumerate_twist_tuples_fullspace();
        auto key = [](const TwistTuple& t) { return t.theta_exp; };
        std::vector<std::array<int, 6>> a, b;
        for (const auto& t : tuples) a.push_back(key(t));
        for (const auto& t : full) b.push_back(key(t));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        rep.audit_ran = true;
        rep.audit_fullspace_ok = (a == b);
    }
    rep.survivors = gauss_filter(tuples, d);
    rep.survivor_count = static_cast<int>(rep.survivors.size());
    bool all_fail = !rep.survivors.empty();
    for (const TwistTuple& t : rep.survivors) {
        SMatrix s = balancing_s_matrix(t, d, ring);
        VerlindeResult vr = verlinde_residuals(s, ring, d);
        if (vr.structural_failure) {
            rep.mismatch_counts.push_back(-1);
            continue;
        }
        rep.mismatch_counts.push_back(static_cast<int>(vr.mismatches.size()));
        bool found = false;
        for (const auto& m : vr.mismatches)
            if (m.i == 1 && m.j == 1 && m.k == 1) {
                rep.witnesses.push_back(m);
                found = true;
                break;
            }
        if (!found) {
            if (vr.mismatches.empty()) all_fail = false;
            else rep.witnesses.push_back(vr.mismatches.front());
        }
    }
    rep.certified = all_fail;
    return rep;
}

}  // namespace pucert
