#include "pucert/census.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pucert/fusion_ring.hpp"

namespace pucert {

Cyc DNumber::value() const {
    return Cyc::integer(3).pow(a) * (unit_u1().pow(b) * unit_u2().pow(c)).pow(2) *
           elem_beta().pow(d);
}

Cyc DNumber::sqrt_value() const {
    if ((a - d) % 2 != 0) throw std::domain_error("DNumber: not a perfect square");
    Cyc root3beta = unit_u1().inverse() * unit_u2().inverse() * elem_beta().pow(2);
    return Cyc::integer(3).pow((a - d) / 2) * unit_u1().pow(b) * unit_u2().pow(c) *
           root3beta.pow(d);
}

bool totally_positive_unit_classify(int sign, int x, int y, CertifiedSignContext& ctx) {
    bool parity = sign > 0 && x % 2 == 0 && y % 2 == 0;
    Cyc u = unit_u1().pow(x) * unit_u2().pow(y);
    if (sign < 0) u = -u;
    bool certified = ctx.is_totally_positive(u);
    if (parity != certified)
        throw std::logic_error("totally_positive_unit_classify: parity rule and certified signs disagree");
    return certified;
}

std::array<DNumber, 3> orbit_conjugates(const DNumber& n) {
    std::array<DNumber, 3> out = {n,
                                  DNumber{n.a, -(n.b + n.c + n.d), n.b, n.d},
                                  DNumber{n.a, n.c, -(n.b + n.c + n.d), n.d}};
    const Automorphism& s = sigma_real();
    if (s(n.value()) != out[1].value() || s(s(n.value())) != out[2].value())
        throw std::logic_error("orbit_conjugates: exponent formulas disagree with the automorphism");
    return out;
}

bool is_orbit_max(const DNumber& n, CertifiedSignContext& ctx) {
    Cyc v = n.value();
    for (const DNumber& c : orbit_conjugates(n))
        if (ctx.compare(v, c.value()) < 0) return false;
    return true;
}

bool is_perfect_square(const DNumber& n) { return (n.a - n.d) % 2 == 0; }

std::array<DNumber, 3> dimensional_orbit(const DNumber& n) {
    return {n,
            DNumber{n.a, 2 - (n.b + n.c + n.d), n.b + 2, n.d},
            DNumber{n.a, n.c - 2, 4 - (n.b + n.c + n.d), n.d}};
}

std::vector<DNumber> enumerate_candidate_squared_dims(CertifiedSignContext& ctx) {
    std::vector<DNumber> out;
    const Cyc upper = Cyc::integer(3938);
    const Cyc lower = Cyc::integer(49);
    for (int a = 0; a <= 4; ++a)
        for (int b = -2; b <= 4; ++b)
            for (int c = 0; c <= 6; ++c)
                for (int d = 0; d <= 2; ++d) {
                    DNumber n{a, b, c, d};
                    if (!is_perfect_square(n)) continue;
                    auto dimorb = dimensional_orbit(n);
                    bool ok = true;
                    for (const DNumber& m : dimorb)
                        if (!is_orbit_max(m, ctx)) {
                            ok = false;
                            break;
                        }
                    if (!ok) continue;
                    for (const DNumber& m : dimorb) {
                        Cyc v = m.value();
                        if (ctx.compare(v, upper) >= 0 || ctx.compare(v, lower) <= 0) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) out.push_back(n);
                }
    return out;
}

namespace {

bool norm_is_pm_power_of_3(const Rat& r) {
    if (sgn(r) == 0) return false;
    Rat p = abs(r);
    if (p.get_den() != 1) return false;
    Int m = p.get_num();
    while (m % 3 == 0) m /= 3;
    return m == 1;
}

}  // namespace

std::vector<SmallDim> small_dim_scan(CertifiedSignContext& ctx) {
    const Cyc& u1 = unit_u1();
    const Cyc& u2 = unit_u2();
    const Cyc b1 = u2, b2 = u1 * u2, b3 = u1.inverse() * u2.pow(2);
    std::vector<SmallDim> out;
    for (int x = 0; x <= 2; ++x)
        for (int y = 0; y <= 2; ++y)
            for (int z = 0; z <= 2; ++z) {
                if (!x && !y && !z) continue;
                Cyc v = Cyc::integer(x) * b1 + Cyc::integer(y) * b2 + Cyc::integer(z) * b3;
                Rat n = norm_real(v);
                if (norm_is_pm_power_of_3(n))
                    out.push_back({{x, y, z}, v, n});
            }
    std::sort(out.begin(), out.end(), [&](const SmallDim& a, const SmallDim& b) {
        return ctx.compare(a.value, b.value) < 0;
    });
    return out;
}

Cyc DimFact::value() const {
    return Cyc::integer(3).pow(p3) * unit_u1().pow(e1) * unit_u2().pow(e2) * elem_beta().pow(e3);
}

std::string DimFact::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& name, int e) {
        if (!e) return;
        if (!first) os << '*';
        first = false;
        os << name;
        if (e != 1) os << '^' << e;
    };
    emit("3", p3);
    emit("u1", e1);
    emit("u2", e2);
    emit("beta", e3);
    if (first) os << '1';
    return os.str();
}

DimFact dim_fact_sqrt(const DNumber& n) {
    if (!is_perfect_square(n)) throw std::domain_error("dim_fact_sqrt: not a perfect square");
    // sqrt = 3^((a-d)/2) u1^(b-d) u2^(c-d) beta^(2d), then reduce beta^3 = 3 u1^2 u2^2
    DimFact f{(n.a - n.d) / 2, n.b - n.d, n.c - n.d, 2 * n.d};
    while (f.e3 >= 3) {
        f.e3 -= 3;
        f.p3 += 1;
        f.e1 += 2;
        f.e2 += 2;
    }
    if (f.value() != n.sqrt_value()) throw std::logic_error("dim_fact_sqrt: factored value mismatch");
    return f;
}

std::vector<std::array<int, 4>> profile_solutions(const Cyc& dim, bool allow_m0,
                                                  CertifiedSignContext& ctx) {
    const Cyc& u1 = unit_u1();
    const Cyc& u2 = unit_u2();
    const Cyc b1 = u2, b2 = u1 * u2, b3 = u1.inverse() * u2.pow(2);
    std::vector<std::array<int, 4>> sols;
    for (int m0 = 0; m0 <= (allow_m0 ? 1 : 0); ++m0) {
        Cyc rem0 = dim - Cyc::integer(m0);
        if (rem0.is_zero()) {
            sols.push_back({m0, 0, 0, 0});
            continue;
        }
        if (ctx.sign(rem0) == Sign::negative) continue;
        long zmax = certified_floor_ratio(rem0, b3).get_si();
        for (long z = 0; z <= zmax; ++z) {
            Cyc rem1 = rem0 - Cyc::integer(z) * b3;
            if (rem1.is_zero()) {
                sols.push_back({m0, 0, 0, static_cast<int>(z)});
                continue;
            }
            if (ctx.sign(rem1) == Sign::negative) continue;
            long ymax = ctx.floor_ratio(rem1, b2).get_si();
            for (long y = 0; y <= ymax; ++y) {
                Cyc rem2 = rem1 - Cyc::integer(y) * b2;
                if (rem2.is_zero()) {
                    sols.push_back({m0, 0, static_cast<int>(y), static_cast<int>(z)});
                    continue;
                }
                Cyc q = rem2 / b1;
                if (q.is_rational()) {
                    Rat v = q.rational_value();
                    if (v.get_den() == 1 && sgn(v) > 0)
                        sols.push_back({m0, static_cast<int>(v.get_num().get_si()),
                                        static_cast<int>(y), static_cast<int>(z)});
                }
            }
        }
    }
    return sols;
}

namespace {

// orbit assembly entry: the minimal member's squared dimension plus how the
// row acquired its unit multiplicity
struct OrbitSeed {
    DNumber min_member;   // squared dimension of the smallest member
    bool carries_unit;    // rows take the m0 = 1 profile
    bool singleton_only;  // expand to one row even if the chain is longer
};

DNumber min_member_of(const DNumber& q, CertifiedSignContext& ctx) {
    auto orb = dimensional_orbit(q);
    DNumber best = orb[0];
    Cyc bestv = best.sqrt_value();
    for (int i = 1; i < 3; ++i) {
        Cyc v = orb[i].sqrt_value();
        if (ctx.compare(v, bestv) < 0) {
            best = orb[i];
            bestv = v;
        }
    }
    return best;
}

DNumber quad_of_fact(const DimFact& f) {
    DNumber n{2 * f.p3, f.e1, f.e2, 2 * f.e3};
    while (n.d >= 3) {
        n.d -= 3;
        n.a += 1;
        n.b += 1;
        n.c += 1;
    }
    return n;
}

}  // namespace

int Figure3::orbit_count() const {
    int m = -1;
    for (const auto& r : rows) m = std::max(m, r.orbit);
    return m + 1;
}

Figure3 build_figure3(CertifiedSignContext& ctx) {
    const Cyc& u2 = unit_u2();

    std::vector<OrbitSeed> seeds;
    // unit orbit and the codegree-pinned u2^2 objects carry the tensor unit
    seeds.push_back({DNumber{0, 0, 0, 0}, true, false});
    seeds.push_back({quad_of_fact(DimFact{0, 0, 2, 0}), true, true});

    auto add_search_seed = [&](const DNumber& q) {
        DNumber m = min_member_of(q, ctx);
        for (const auto& s : seeds)
            if (!s.carries_unit && s.min_member == m) return;
        seeds.push_back({m, false, false});
    };
    // every dimension whose square is below the lower search bound 49 comes
    // from the bounded multiplicity scan; factor those hits as unit words
    // times beta powers and seed their dimensional orbits
    for (const SmallDim& sd : small_dim_scan(ctx)) {
        if (ctx.compare(sd.value * sd.value, Cyc::integer(49)) > 0) continue;
        bool matched = false;
        for (int e3 = 0; e3 <= 2 && !matched; ++e3)
            for (int e1 = -4; e1 <= 4 && !matched; ++e1)
                for (int e2 = -1; e2 <= 6 && !matched; ++e2) {
                    DimFact f{0, e1, e2, e3};
                    if (f.value() == sd.value) {
                        add_search_seed(quad_of_fact(f));
                        matched = true;
                    }
                }
        if (!matched) throw std::logic_error("build_figure3: small dimension without unit-word form");
    }
    for (const DNumber& q : enumerate_candidate_squared_dims(ctx)) add_search_seed(q);

    // order orbits by minimal dimension, unit-carrying first on ties
    std::stable_sort(seeds.begin(), seeds.end(), [&](const OrbitSeed& x, const OrbitSeed& y) {
        int c = ctx.compare(x.min_member.sqrt_value(), y.min_member.sqrt_value());
        if (c != 0) return c < 0;
        return x.carries_unit && !y.carries_unit;
    });

    Figure3 fig;
    int label = 0, orbit = 0;
    for (const OrbitSeed& seed : seeds) {
        std::vector<DNumber> chain;
        for (const DNumber& m : dimensional_orbit(seed.min_member)) {
            bool dup = false;
            for (const DNumber& c : chain) dup = dup || c == m;
            if (!dup) chain.push_back(m);
        }
        if (seed.singleton_only) chain.resize(1);
        for (const DNumber& q : chain) {
            Cyc dim = q.sqrt_value();
            auto sols = profile_solutions(dim, true, ctx);
            std::vector<std::array<int, 4>> wanted;
            for (const auto& s : sols)
                if ((s[0] == 1) == seed.carries_unit) wanted.push_back(s);
            if (wanted.size() != 1)
                throw std::logic_error("build_figure3: profile not unique for a table row");
            const auto& p = wanted[0];
            fig.rows.push_back({label++, orbit, dim_fact_sqrt(q), p[0], p[1], p[2], p[3]});
        }
        ++orbit;
    }
    return fig;
}

std::string figure3_tsv(const Figure3& f) {
    std::ostringstream os;
    os << "label\torbit\tdim\tm0\tm125\tm3\tm4\n";
    for (const auto& r : f.rows)
        os << r.label << '\t' << r.orbit << '\t' << r.dim.str() << '\t' << r.m0 << '\t' << r.m125
           << '\t' << r.m3 << '\t' << r.m4 << '\n';
    return os.str();
}

}  // namespace pucert
