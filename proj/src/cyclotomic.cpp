#include "pucert/cyclotomic.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <vector>

namespace pucert {

namespace {

// zeta^k as a coordinate vector, k = 0..17 (products of basis powers reach 10)
const std::array<std::array<int, 6>, 18>& reduction_table() {
    static const auto table = [] {
        std::array<std::array<int, 6>, 18> t{};
        for (int k = 0; k < 18; ++k) {
            int kk = k % 9;
            if (kk < 6) {
                t[k][kk] = 1;
            } else if (kk == 6) {
                t[k][0] = -1;
                t[k][3] = -1;
            } else if (kk == 7) {
                t[k][1] = -1;
                t[k][4] = -1;
            } else {
                t[k][2] = -1;
                t[k][5] = -1;
            }
        }
        return t;
    }();
    return table;
}

}  // namespace

Cyc Cyc::integer(long n) {
    std::array<Rat, 6> c{};
    c[0] = n;
    return Cyc(std::move(c));
}

Cyc Cyc::rational(const Rat& q) {
    std::array<Rat, 6> c{};
    c[0] = q;
    return Cyc(std::move(c));
}

Cyc Cyc::zeta(int k) {
    k %= 9;
    if (k < 0) k += 9;
    const auto& row = reduction_table()[k];
    std::array<Rat, 6> c{};
    for (int i = 0; i < 6; ++i) c[i] = row[i];
    return Cyc(std::move(c));
}

bool Cyc::is_zero() const {
    for (const auto& x : c_)
        if (sgn(x) != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (int i = 1; i < 6; ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

Rat Cyc::rational_value() const {
    if (!is_rational()) throw std::domain_error("Cyc: not a rational element");
    return c_[0];
}

bool Cyc::is_real() const { return conj() == *this; }

Cyc Cyc::operator+(const Cyc& o) const {
    std::array<Rat, 6> c;
    for (int i = 0; i < 6; ++i) c[i] = c_[i] + o.c_[i];
    return Cyc(std::move(c));
}

Cyc Cyc::operator-(const Cyc& o) const {
    std::array<Rat, 6> c;
    for (int i = 0; i < 6; ++i) c[i] = c_[i] - o.c_[i];
    return Cyc(std::move(c));
}

Cyc Cyc::operator-() const {
    std::array<Rat, 6> c;
    for (int i = 0; i < 6; ++i) c[i] = -c_[i];
    return Cyc(std::move(c));
}

Cyc Cyc::operator*(const Cyc& o) const {
    std::array<Rat, 11> prod{};
    for (int i = 0; i < 6; ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (int j = 0; j < 6; ++j) {
            if (sgn(o.c_[j]) == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    const auto& table = reduction_table();
    std::array<Rat, 6> c{};
    for (int k = 0; k < 11; ++k) {
        if (sgn(prod[k]) == 0) continue;
        for (int t = 0; t < 6; ++t) {
            int coef = table[k][t];
            if (coef == 1)
                c[t] += prod[k];
            else if (coef == -1)
                c[t] -= prod[k];
        }
    }
    return Cyc(std::move(c));
}

namespace {

using Poly = std::vector<Rat>;  // low degree first, no trailing zeros

void trim(Poly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly sub_scaled_shifted(const Poly& p, const Poly& q, const Rat& s, size_t k) {
    // p - s * x^k * q
    Poly r = p;
    if (r.size() < q.size() + k) r.resize(q.size() + k);
    for (size_t i = 0; i < q.size(); ++i) r[i + k] -= s * q[i];
    trim(r);
    return r;
}

}  // namespace

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("Cyc: division by zero");
    // extended euclid on (phi, this) tracking the cofactor of `this`
    Poly r0 = {Rat(1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(1)};
    Poly r1(c_.begin(), c_.end());
    trim(r1);
    Poly t0 = {};
    Poly t1 = {Rat(1)};
    while (!r1.empty()) {
        // divide r0 by r1
        Poly rem = r0;
        Poly quo(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rat s = rem.back() / r1.back();
            size_t k = rem.size() - r1.size();
            quo[k] = s;
            rem = sub_scaled_shifted(rem, r1, s, k);
        }
        // t_next = t0 - quo * t1
        Poly tn = t0;
        for (size_t i = 0; i < quo.size(); ++i) {
            if (sgn(quo[i]) == 0) continue;
            tn = sub_scaled_shifted(tn, t1, quo[i], i);
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(tn);
    }
    // r0 is a nonzero constant (phi is irreducible); t0 * this == r0 mod phi
    std::array<Rat, 6> c{};
    Rat inv_gcd = Rat(1) / r0[0];
    for (size_t i = 0; i < t0.size() && i < 6; ++i) c[i] = t0[i] * inv_gcd;
    Cyc result(std::move(c));
    return result;
}

Cyc Cyc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyc r = one();
    Cyc b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Cyc Cyc::galois_exp(int k) const {
    const auto& table = reduction_table();
    std::array<Rat, 6> c{};
    for (int i = 0; i < 6; ++i) {
        if (sgn(c_[i]) == 0) continue;
        const auto& row = table[(i * k) % 9];
        for (int t = 0; t < 6; ++t) {
            if (row[t] == 1)
                c[t] += c_[i];
            else if (row[t] == -1)
                c[t] -= c_[i];
        }
    }
    return Cyc(std::move(c));
}

std::array<Rat, 3> Cyc::real_coords() const {
    // 1 = (1,0,0,0,0,0), a = (0,0,0,0,-1,-1), a^2 = (2,1,-1,0,0,-1)
    // so r2 = c1, r1 = -c4, r0 = c0 - 2*c1, with consistency on c2, c3, c5.
    if (!is_real()) throw std::domain_error("Cyc: real_coords on non-real element");
    std::array<Rat, 3> r;
    r[2] = c_[1];
    r[1] = -c_[4];
    r[0] = c_[0] - 2 * c_[1];
    return r;
}

int Cyc::cmp_coords(const Cyc& a, const Cyc& b) {
    for (int i = 0; i < 6; ++i) {
        int c = cmp(a.c_[i], b.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string Cyc::str() const {
    std::ostringstream os;
    for (int i = 0; i < 6; ++i) {
        if (i) os << ',';
        os << c_[i];
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyc& x) { return os << x.str(); }

Automorphism::Automorphism(int kk) : k(((kk % 9) + 9) % 9) {
    if (k == 0 || k == 3 || k == 6)
        throw std::invalid_argument("Automorphism: exponent must be coprime to 9");
}

const Cyc& unit_u1() {
    static const Cyc u = Cyc::zeta(1) - Cyc::zeta(2) - Cyc::zeta(5);
    return u;
}

const Cyc& unit_u2() {
    static const Cyc u = Cyc::one() - Cyc::zeta(4) - Cyc::zeta(5);
    return u;
}

const Cyc& elem_beta() {
    static const Cyc b = Cyc::integer(2) - Cyc::zeta(4) - Cyc::zeta(5);
    return b;
}

const Cyc& elem_a() {
    static const Cyc a = -(Cyc::zeta(4) + Cyc::zeta(5));
    return a;
}

const Automorphism& full_generator() {
    static const Automorphism g = [] {
        Automorphism gen(2);
        Automorphism sq = gen.compose(gen);
        const Cyc& u1 = unit_u1();
        const Cyc& u2 = unit_u2();
        if (sq(u1) != -(u1.inverse() * u2) || sq(u2) != u1.inverse())
            throw std::logic_error("galois generator validation failed");
        return gen;
    }();
    return g;
}

const Automorphism& sigma_real() {
    static const Automorphism s = full_generator().compose(full_generator());
    return s;
}

Rat norm_real(const Cyc& x) {
    if (!x.is_real()) throw std::domain_error("norm_real: non-real input");
    const Automorphism& s = sigma_real();
    Cyc n = x * s(x) * s(s(x));
    if (!n.is_rational()) throw std::domain_error("norm_real: product not rational");
    return n.rational_value();
}

CertifiedSignContext::CertifiedSignContext() {
    roots_[0] = {Rat(1), Rat(2), 0};
    roots_[1] = {Rat(-1), Rat(0), 0};
    roots_[2] = {Rat(-2), Rat(-1), 0};
}

namespace {

// x^3 - 3x - 1 at a rational point
Rat minpoly_at(const Rat& t) { return t * t * t - 3 * t - 1; }

struct Interval {
    Rat lo, hi;
};

Interval imul(const Interval& x, const Interval& y) {
    Rat a = x.lo * y.lo, b = x.lo * y.hi, c = x.hi * y.lo, d = x.hi * y.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

}  // namespace

void CertifiedSignContext::refine(int e, int target_bits) {
    Enclosure& enc = roots_[e];
    // each bisection halves the width; track width as 2^-bits from the unit start
    while (enc.bits < target_bits) {
        Rat mid = (enc.lo + enc.hi) / 2;
        // the root is simple and interior, so the sign at mid decides the half
        int s = sgn(minpoly_at(mid));
        int slo = sgn(minpoly_at(enc.lo));
        if (s == 0) {
            // never happens for this cubic (no rational roots), guard anyway
            enc.lo = mid - Rat(1, 1 << 20);
            enc.hi = mid + Rat(1, 1 << 20);
        } else if (s == slo) {
            enc.lo = mid;
        } else {
            enc.hi = mid;
        }
        ++enc.bits;
    }
}

Sign CertifiedSignContext::sign(const Cyc& x, int embedding) {
    auto rc = x.real_coords();
    if (sgn(rc[0]) == 0 && sgn(rc[1]) == 0 && sgn(rc[2]) == 0) return Sign::zero;
    if (sgn(rc[1]) == 0 && sgn(rc[2]) == 0)
        return sgn(rc[0]) > 0 ? Sign::positive : Sign::negative;
    for (int bits = 64;; bits *= 2) {
        refine(embedding, bits);
        Interval t{roots_[embedding].lo, roots_[embedding].hi};
        Interval t2 = imul(t, t);
        Interval v{rc[0], rc[0]};
        Interval r1t = imul({rc[1], rc[1]}, t);
        Interval r2t2 = imul({rc[2], rc[2]}, t2);
        v.lo += r1t.lo + r2t2.lo;
        v.hi += r1t.hi + r2t2.hi;
        if (sgn(v.lo) > 0) return Sign::positive;
        if (sgn(v.hi) < 0) return Sign::negative;
        // a nonzero quadratic in a cubic irrationality cannot vanish, keep refining
    }
}

bool CertifiedSignContext::is_totally_positive(const Cyc& x) {
    for (int e = 0; e < 3; ++e)
        if (sign(x, e) != Sign::positive) return false;
    return true;
}

int CertifiedSignContext::compare(const Cyc& x, const Cyc& y) {
    return static_cast<int>(sign(x - y, 0));
}

Int CertifiedSignContext::floor_ratio(const Cyc& x, const Cyc& y) {
    if (y.is_zero()) throw std::domain_error("floor_ratio: division by zero");
    Cyc q = x / y;
    if (q.is_rational()) {
        Rat v = q.rational_value();
        Int f;
        mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
        return f;
    }
    auto rc = q.real_coords();
    auto rat_floor = [](const Rat& v) {
        Int f;
        mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
        return f;
    };
    for (int bits = 64;; bits *= 2) {
        refine(0, bits);
        Interval t{roots_[0].lo, roots_[0].hi};
        Interval t2 = imul(t, t);
        Interval v{rc[0], rc[0]};
        Interval r1t = imul({rc[1], rc[1]}, t);
        Interval r2t2 = imul({rc[2], rc[2]}, t2);
        v.lo += r1t.lo + r2t2.lo;
        v.hi += r1t.hi + r2t2.hi;
        Int flo = rat_floor(v.lo), fhi = rat_floor(v.hi);
        if (flo == fhi) return flo;
        if (fhi == flo + 1) {
            // boundary integer inside the enclosure: decide exactly
            if (q == Cyc::rational(Rat(fhi))) return fhi;
            // q is irrational here, so the boundary will be excluded eventually
        }
    }
}

namespace {
CertifiedSignContext& local_context() {
    thread_local CertifiedSignContext ctx;
    return ctx;
}
}  // namespace

Sign certified_sign(const Cyc& x, int embedding) { return local_context().sign(x, embedding); }
bool certified_totally_positive(const Cyc& x) { return local_context().is_totally_positive(x); }
int certified_compare(const Cyc& x, const Cyc& y) { return local_context().compare(x, y); }
Int certified_floor_ratio(const Cyc& x, const Cyc& y) { return local_context().floor_ratio(x, y); }

}  // namespace pucert
