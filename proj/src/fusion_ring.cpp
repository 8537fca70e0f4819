#include "pucert/fusion_ring.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace pucert {

std::vector<int> FusionRing::mul(const std::vector<int>& u, const std::vector<int>& v) const {
    std::vector<int> out(rank, 0);
    for (int i = 0; i < rank; ++i) {
        if (!u[i]) continue;
        for (int j = 0; j < rank; ++j) {
            if (!v[j]) continue;
            for (int k = 0; k < rank; ++k) out[k] += u[i] * v[j] * N(i, j, k);
        }
    }
    return out;
}

ValidationReport validate(const FusionRing& ring) {
    ValidationReport rep;
    const int r = ring.rank;
    if (r <= 0 || ring.n.size() != static_cast<size_t>(r) * r * r ||
        ring.dual.size() != static_cast<size_t>(r)) {
        rep.violations.push_back({"shape", {}});
        return rep;
    }
    for (int v : ring.n)
        if (v < 0) {
            rep.violations.push_back({"nonneg", {}});
            break;
        }
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
            if (ring.N(0, j, k) != (j == k))
                rep.violations.push_back({"unit", {0, j, k}});
            if (ring.N(j, 0, k) != (j == k))
                rep.violations.push_back({"unit", {j, 0, k}});
        }
    if (ring.dual[0] != 0) rep.violations.push_back({"dual", {0}});
    for (int i = 0; i < r; ++i) {
        if (ring.dual[i] < 0 || ring.dual[i] >= r || ring.dual[ring.dual[i]] != i) {
            rep.violations.push_back({"dual", {i}});
            continue;
        }
        for (int j = 0; j < r; ++j)
            if (ring.N(i, j, 0) != (j == ring.dual[i]))
                rep.violations.push_back({"dual", {i, j}});
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                for (int l = 0; l < r; ++l) {
                    long lhs = 0, rhs = 0;
                    for (int m = 0; m < r; ++m) {
                        lhs += static_cast<long>(ring.N(i, j, m)) * ring.N(m, k, l);
                        rhs += static_cast<long>(ring.N(j, k, m)) * ring.N(i, m, l);
                    }
                    if (lhs != rhs) rep.violations.push_back({"assoc", {i, j, k, l}});
                }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                if (ring.N(i, j, k) != ring.N(j, i, k))
                    rep.violations.push_back({"comm", {i, j, k}});
    return rep;
}

const FusionRing& builtin_R() {
    static const FusionRing ring = [] {
        static const int tables[6][6][6] = {
            {{1,0,0,0,0,0},{0,1,0,0,0,0},{0,0,1,0,0,0},{0,0,0,1,0,0},{0,0,0,0,1,0},{0,0,0,0,0,1}},
            {{0,1,0,0,0,0},{1,0,1,1,0,0},{0,1,0,0,1,0},{0,1,0,1,1,0},{0,0,1,1,1,1},{0,0,0,0,1,1}},
            {{0,0,1,0,0,0},{0,1,0,0,1,0},{1,0,0,1,0,1},{0,0,1,1,1,0},{0,1,0,1,1,1},{0,0,1,0,1,0}},
            {{0,0,0,1,0,0},{0,1,0,1,1,0},{0,0,1,1,1,0},{1,1,1,1,1,1},{0,1,1,1,2,1},{0,0,0,1,1,1}},
            {{0,0,0,0,1,0},{0,0,1,1,1,1},{0,1,0,1,1,1},{0,1,1,1,2,1},{1,1,1,2,2,1},{0,1,1,1,1,0}},
            {{0,0,0,0,0,1},{0,0,0,0,1,1},{0,0,1,0,1,0},{0,0,0,1,1,1},{0,1,1,1,1,0},{1,1,0,1,0,0}},
        };
        FusionRing rg;
        rg.rank = 6;
        rg.labels = {"X0", "X1", "X2", "X3", "X4", "X5"};
        rg.n.resize(6 * 6 * 6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                for (int k = 0; k < 6; ++k) rg.N(i, j, k) = tables[i][j][k];
        rg.dual = {0, 1, 2, 3, 4, 5};  // self-dual
        if (!validate(rg).ok()) throw std::logic_error("builtin ring fails validation");
        return rg;
    }();
    return ring;
}

FusionRing trivial_ring() {
    FusionRing rg;
    rg.rank = 1;
    rg.labels = {"X0"};
    rg.n = {1};
    rg.dual = {0};
    return rg;
}

FusionRing product_ring(const FusionRing& a, const FusionRing& b) {
    if (!validate(a).ok() || !validate(b).ok())
        throw std::invalid_argument("product_ring: invalid factor");
    FusionRing p;
    p.rank = a.rank * b.rank;
    p.n.assign(static_cast<size_t>(p.rank) * p.rank * p.rank, 0);
    p.dual.resize(p.rank);
    p.labels.resize(p.rank);
    auto id = [&](int i, int j) { return i * b.rank + j; };
    for (int i = 0; i < a.rank; ++i)
        for (int j = 0; j < b.rank; ++j) {
            p.dual[id(i, j)] = id(a.dual[i], b.dual[j]);
            p.labels[id(i, j)] = a.labels[i] + "*" + b.labels[j];
        }
    for (int i1 = 0; i1 < a.rank; ++i1)
        for (int i2 = 0; i2 < b.rank; ++i2)
            for (int j1 = 0; j1 < a.rank; ++j1)
                for (int j2 = 0; j2 < b.rank; ++j2)
                    for (int k1 = 0; k1 < a.rank; ++k1)
                        for (int k2 = 0; k2 < b.rank; ++k2)
                            p.N(id(i1, i2), id(j1, j2), id(k1, k2)) =
                                a.N(i1, j1, k1) * b.N(i2, j2, k2);
    if (!validate(p).ok()) throw std::logic_error("product_ring: product fails validation");
    return p;
}

bool check_dim_hom(const FusionRing& ring, const DimVector& d) {
    if (static_cast<int>(d.size()) != ring.rank) return false;
    for (int i = 0; i < ring.rank; ++i)
        for (int j = i; j < ring.rank; ++j) {
            Cyc s;
            for (int k = 0; k < ring.rank; ++k) {
                int m = ring.N(i, j, k);
                if (m) s += Cyc::integer(m) * d[k];
            }
            if (d[i] * d[j] != s) return false;
        }
    return true;
}

FpData fpdim_data_R() {
    static const FpData data = [] {
        const Cyc& u1 = unit_u1();
        const Cyc& u2 = unit_u2();
        FpData fp;
        fp.dims = {Cyc::one(), u2, u2, u1 * u2, u1.inverse() * u2.pow(2), u2};
        for (const Cyc& d : fp.dims) fp.total += d * d;
        if (!check_dim_hom(builtin_R(), fp.dims))
            throw std::logic_error("fpdim vector is not a dimension homomorphism");
        if (fp.total != Cyc::integer(9) * u2.pow(2))
            throw std::logic_error("fpdim total mismatch");
        if (fp.dims[0] != Cyc::one()) throw std::logic_error("fpdim unit mismatch");
        for (const Cyc& d : fp.dims)
            if (certified_sign(d) != Sign::positive)
                throw std::logic_error("fpdim entry not positive");
        return fp;
    }();
    return data;
}

CodegreeData formal_codegrees_R() {
    FpData fp = fpdim_data_R();
    CodegreeData cd;
    for (const Cyc& d : fp.dims) {
        Cyc c = fp.total / (d * d);
        cd.center_dims.push_back(fp.total / c);
        cd.codegrees.push_back(std::move(c));
    }
    return cd;
}

bool DimClassPerm::fixes(int i) const {
    return image[i].size() == 1 && image[i][0] == i;
}

DimClassPerm galois_perm_on_simples(const FusionRing& ring, const DimVector& d,
                                    const Automorphism& g) {
    Cyc total;
    for (const Cyc& x : d) total += x * x;
    Cyc ratio = total / g(total);
    DimClassPerm perm;
    perm.image.resize(ring.rank);
    for (int i = 0; i < ring.rank; ++i) {
        Cyc target = g(d[i] * d[i]) * ratio;
        for (int j = 0; j < ring.rank; ++j)
            if (d[j] * d[j] == target) perm.image[i].push_back(j);
        if (perm.image[i].empty())
            throw std::domain_error("galois_perm_on_simples: no simple carries the image dimension");
    }
    return perm;
}

FusionRing read_fring(std::istream& in) {
    auto next_line = [&](std::string& line) -> bool {
        while (std::getline(in, line)) {
            auto pos = line.find('#');
            if (pos != std::string::npos) line.erase(pos);
            std::istringstream probe(line);
            std::string tok;
            if (probe >> tok) return true;
        }
        return false;
    };
    std::string line, word;
    FusionRing rg;
    if (!next_line(line)) throw std::runtime_error("fring: missing rank line");
    {
        std::istringstream is(line);
        if (!(is >> word >> rg.rank) || word != "rank" || rg.rank <= 0)
            throw std::runtime_error("fring: bad rank line");
    }
    if (!next_line(line)) throw std::runtime_error("fring: missing dual line");
    {
        std::istringstream is(line);
        if (!(is >> word) || word != "dual") throw std::runtime_error("fring: bad dual line");
        rg.dual.resize(rg.rank);
        for (int i = 0; i < rg.rank; ++i)
            if (!(is >> rg.dual[i])) throw std::runtime_error("fring: short dual line");
    }
    rg.n.resize(static_cast<size_t>(rg.rank) * rg.rank * rg.rank);
    rg.labels.resize(rg.rank);
    for (int i = 0; i < rg.rank; ++i) rg.labels[i] = "X" + std::to_string(i);
    for (int i = 0; i < rg.rank; ++i)
        for (int j = 0; j < rg.rank; ++j) {
            if (!next_line(line)) throw std::runtime_error("fring: truncated matrix block");
            std::istringstream is(line);
            for (int k = 0; k < rg.rank; ++k)
                if (!(is >> rg.N(i, j, k))) throw std::runtime_error("fring: short matrix row");
        }
    return rg;
}

void write_fring(std::ostream& out, const FusionRing& ring) {
    out << "rank " << ring.rank << "\n";
    out << "dual";
    for (int d : ring.dual) out << ' ' << d;
    out << "\n";
    for (int i = 0; i < ring.rank; ++i) {
        out << "# N" << i << "\n";
        for (int j = 0; j < ring.rank; ++j) {
            for (int k = 0; k < ring.rank; ++k) out << (k ? " " : "") << ring.N(i, j, k);
            out << "\n";
        }
    }
}

}  // namespace pucert
