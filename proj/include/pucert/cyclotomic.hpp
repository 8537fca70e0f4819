#pragma once

#include <gmpxx.h>

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace pucert {

using Rat = mpq_class;
using Int = mpz_class;

/*
 * Exact arithmetic in the degree-6 cyclotomic field Q(z), z a primitive ninth
 * root of unity.  Elements are stored in the power basis {1, z, ..., z^5},
 * fully reduced modulo the minimal polynomial z^6 + z^3 + 1:
 *
 *     z^6 = -1 - z^3,   z^7 = -z - z^4,   z^8 = -z^2 - z^5,   z^9 = 1.
 *
 * Equality is coordinate equality; coordinates are exact rationals in lowest
 * terms (GMP keeps them canonical).  The real cubic subfield is generated by
 * a = z^4 + z^5 negated, i.e. a = -z^4 - z^5, a root of x^3 - 3x - 1, and
 * {1, a, a^2} is an integral basis of its ring of integers.  Distinguished
 * units u1 = z - z^2 - z^5 and u2 = 1 - z^4 - z^5 generate the unit group of
 * the real subfield together with -1; beta = 2 - z^4 - z^5 = u2 + 1 is the
 * distinguished cube root of 3*u1^2*u2^2.
 */
class Cyc {
public:
    Cyc() = default;

    static Cyc integer(long n);
    static Cyc rational(const Rat& q);
    static Cyc one() { return integer(1); }
    // z^k, reduced (k may be any integer)
    static Cyc zeta(int k);

    const std::array<Rat, 6>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // value as a rational; requires is_rational()
    Rat rational_value() const;
    // fixed by complex conjugation z -> z^8
    bool is_real() const;

    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator-() const;
    Cyc operator*(const Cyc& o) const;
    // exact field inverse via the extended euclidean algorithm against the
    // minimal polynomial; throws std::domain_error on zero
    Cyc inverse() const;
    Cyc operator/(const Cyc& o) const { return *this * o.inverse(); }
    Cyc& operator+=(const Cyc& o) { *this = *this + o; return *this; }
    Cyc& operator-=(const Cyc& o) { *this = *this - o; return *this; }
    Cyc& operator*=(const Cyc& o) { *this = *this * o; return *this; }

    Cyc pow(long e) const;

    bool operator==(const Cyc& o) const { return c_ == o.c_; }
    bool operator!=(const Cyc& o) const { return c_ != o.c_; }

    // substitutes z -> z^k and re-reduces; a field automorphism for k coprime to 9
    Cyc galois_exp(int k) const;
    Cyc conj() const { return galois_exp(8); }

    // coordinates of a real element in the basis {1, a, a^2}; throws on non-real input
    std::array<Rat, 3> real_coords() const;

    // lexicographic coordinate comparison (a canonical total order, not the
    // order of the real embedding)
    static int cmp_coords(const Cyc& a, const Cyc& b);
    bool operator<(const Cyc& o) const { return cmp_coords(*this, o) < 0; }

    // debug printer: exact coordinates "c0,c1,...,c5"
    std::string str() const;

private:
    explicit Cyc(std::array<Rat, 6> c) : c_(std::move(c)) {}
    std::array<Rat, 6> c_{};
};

std::ostream& operator<<(std::ostream& os, const Cyc& x);

// Automorphism z -> z^k of the full field, k in {1,2,4,5,7,8}.
// Composition multiplies exponents mod 9.
struct Automorphism {
    int k = 1;
    explicit Automorphism(int kk);
    Cyc operator()(const Cyc& x) const { return x.galois_exp(k); }
    Automorphism compose(const Automorphism& o) const { return Automorphism((k * o.k) % 9); }
    bool operator==(const Automorphism& o) const { return k == o.k; }
};

// named elements
const Cyc& unit_u1();
const Cyc& unit_u2();
const Cyc& elem_beta();   // 2 - z^4 - z^5, the cube root of 3*u1^2*u2^2
const Cyc& elem_a();      // -z^4 - z^5, maximal real root of x^3 - 3x - 1

// The order-6 generator g of the Galois group whose square restricts to the
// real-subfield 3-cycle s characterized by s(u1) = -u1^{-1}*u2 and
// s(u2) = u1^{-1}.  Validated once at first use; throws std::logic_error if
// the characterization fails.
const Automorphism& full_generator();
const Automorphism& sigma_real();

// x * s(x) * s^2(x) for real x, verified rational; throws std::domain_error
// on non-real input or a non-rational product.
Rat norm_real(const Cyc& x);

enum class Sign { negative = -1, zero = 0, positive = 1 };

/*
 * Certified decisions about real elements.  A real element evaluates, at the
 * e-th real embedding (e = 0, 1, 2), to r0 + r1*t + r2*t^2 where t is the
 * e-th real root of x^3 - 3x - 1, ordered
 *
 *     t_0 in (1, 2)    (the identity embedding, under which u1, u2 > 1),
 *     t_1 in (-1, 0),
 *     t_2 in (-2, -1).
 *
 * Roots are enclosed in dyadic-rational intervals refined by exact bisection;
 * zero is decided exactly on coordinates, never numerically.  Enclosures are
 * cached per context; use one context per worker thread.
 */
class CertifiedSignContext {
public:
    CertifiedSignContext();

    Sign sign(const Cyc& x, int embedding = 0);
    bool is_totally_positive(const Cyc& x);

    // ordering of real x, y under the identity embedding
    int compare(const Cyc& x, const Cyc& y);

    // floor(x / y) for real x and totally positive real y, certified by
    // refining until the enclosure contains no integer boundary, with an
    // exact equality test when the boundary is attained
    Int floor_ratio(const Cyc& x, const Cyc& y);

private:
    struct Enclosure {
        Rat lo, hi;
        int bits;
    };
    void refine(int e, int target_bits);
    std::array<Enclosure, 3> roots_;
};

// convenience wrappers over a thread-local context
Sign certified_sign(const Cyc& x, int embedding = 0);
bool certified_totally_positive(const Cyc& x);
int certified_compare(const Cyc& x, const Cyc& y);
Int certified_floor_ratio(const Cyc& x, const Cyc& y);

}  // namespace pucert
