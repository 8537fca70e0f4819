#include "doctest.h"

#include <random>

#include "pucert/cyclotomic.hpp"

using namespace pucert;

namespace {

Cyc from_ints(std::initializer_list<long> v) {
    Cyc r;
    int i = 0;
    for (long x : v) r += Cyc::rational(Rat(x)) * Cyc::zeta(i++);
    return r;
}

Cyc random_cyc(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    Cyc r;
    for (int i = 0; i < 6; ++i) r += Cyc::rational(Rat(num(rng), den(rng))) * Cyc::zeta(i);
    return r;
}

}  // namespace

TEST_CASE("reduction by the minimal polynomial") {
    CHECK(Cyc::zeta(3) * Cyc::zeta(3) == from_ints({-1, 0, 0, -1}));  // z^6 = -1 - z^3
    CHECK(Cyc::zeta(1).pow(9) == Cyc::one());
    CHECK(Cyc::zeta(1).pow(3) != Cyc::one());
    CHECK((Cyc::zeta(1).pow(6) + Cyc::zeta(1).pow(3) + Cyc::one()).is_zero());
}

TEST_CASE("named elements and their identities") {
    const Cyc& u1 = unit_u1();
    const Cyc& u2 = unit_u2();
    const Cyc& b = elem_beta();
    const Cyc& a = elem_a();
    CHECK((a.pow(3) - Cyc::integer(3) * a - Cyc::one()).is_zero());
    CHECK(u1 == a.pow(2) - Cyc::integer(2));
    CHECK(u2 == Cyc::one() + a);
    CHECK(b.pow(3) == Cyc::integer(3) * u1.pow(2) * u2.pow(2));
    // sqrt(3*beta) = u1^-1 u2^-1 beta^2
    Cyc root = u1.inverse() * u2.inverse() * b.pow(2);
    CHECK(root * root == Cyc::integer(3) * b);
    // frozen product coordinates
    CHECK(u1 * u2 == from_ints({1, 1, -1, 0, -1, -2}));
    CHECK(u1.inverse() * u2.pow(2) == from_ints({2, 1, -1, 0, -1, -2}));
    CHECK(u1.inverse() == from_ints({1, 1, -1, 0, 1, 0}));
}

TEST_CASE("galois action") {
    const Cyc& u1 = unit_u1();
    const Cyc& u2 = unit_u2();
    const Automorphism& s = sigma_real();
    CHECK(s(u1) == -(u1.inverse() * u2));
    CHECK(s(u2) == u1.inverse());
    CHECK(s(u1) == from_ints({0, 0, 0, 0, 1, 1}));
    CHECK(s.k == 4);
    // identity fixes everything
    Automorphism id(1);
    CHECK(id(u1 * u2 + elem_beta()) == u1 * u2 + elem_beta());
    // order six: g^6 = id on a non-real probe
    Automorphism g = full_generator();
    Cyc probe = Cyc::zeta(1) + Cyc::integer(2) * Cyc::zeta(2);
    Cyc img = probe;
    for (int i = 0; i < 6; ++i) img = g(img);
    CHECK(img == probe);
    // sigma(beta) = u1^-2 beta, sigma^2(beta) = u2^-2 beta
    const Cyc& b = elem_beta();
    CHECK(s(b) == u1.inverse().pow(2) * b);
    CHECK(s(s(b)) == u2.inverse().pow(2) * b);
}

TEST_CASE("conjugation fixes exactly the real elements") {
    CHECK(unit_u1().is_real());
    CHECK(unit_u2().is_real());
    CHECK(elem_beta().is_real());
    CHECK(!Cyc::zeta(1).is_real());
    CHECK((Cyc::zeta(1) + Cyc::zeta(8)).is_real());
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        Cyc x = random_cyc(rng);
        Cyc sym = x + x.conj();
        CHECK(sym.is_real());
        if (!x.is_real()) CHECK(x.conj() != x);
    }
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(12345);
    for (int t = 0; t < 200; ++t) {
        Cyc x = random_cyc(rng), y = random_cyc(rng), z = random_cyc(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        if (!x.is_zero()) CHECK(x * x.inverse() == Cyc::one());
    }
}

TEST_CASE("galois is multiplicative and a group action") {
    std::mt19937 rng(99);
    const int exps[] = {1, 2, 4, 5, 7, 8};
    for (int t = 0; t < 40; ++t) {
        Cyc x = random_cyc(rng), y = random_cyc(rng);
        for (int k : exps) {
            Automorphism g(k);
            CHECK(g(x * y) == g(x) * g(y));
            CHECK(g(x + y) == g(x) + g(y));
        }
        // composition corresponds to exponent multiplication mod 9
        Automorphism g2(2), g5(5);
        CHECK(g2(g5(x)) == x.galois_exp((2 * 5) % 9));
    }
}

TEST_CASE("division by zero reported") {
    CHECK_THROWS_AS(Cyc().inverse(), std::domain_error);
    CHECK_THROWS_AS(Cyc::one() / Cyc(), std::domain_error);
}

TEST_CASE("norm of real elements") {
    CHECK(norm_real(unit_u2()) == Rat(-1));
    CHECK(norm_real(unit_u1()) == Rat(-1));
    CHECK(norm_real(elem_beta()) == Rat(3));
    CHECK(norm_real(Cyc::integer(3)) == Rat(27));
    CHECK_THROWS_AS(norm_real(Cyc::zeta(1)), std::domain_error);
    // multiplicativity and unit words
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> e(-3, 3);
    for (int t = 0; t < 30; ++t) {
        Cyc w1 = unit_u1().pow(e(rng)) * unit_u2().pow(e(rng));
        Cyc w2 = unit_u1().pow(e(rng)) * unit_u2().pow(e(rng)) * elem_beta().pow(std::abs(e(rng)));
        CHECK(norm_real(w1 * w2) == norm_real(w1) * norm_real(w2));
        Rat nw = norm_real(w1);
        CHECK((nw == 1 || nw == -1));
    }
}

TEST_CASE("certified signs") {
    CertifiedSignContext ctx;
    for (int e = 0; e < 3; ++e) CHECK(ctx.sign(Cyc(), e) == Sign::zero);
    CHECK(ctx.sign(unit_u1()) == Sign::positive);
    CHECK(ctx.sign(unit_u2()) == Sign::positive);
    CHECK(ctx.sign(sigma_real()(unit_u1())) == Sign::negative);
    // u2 embedding signs: +, +, -
    CHECK(ctx.sign(unit_u2(), 0) == Sign::positive);
    CHECK(ctx.sign(unit_u2(), 1) == Sign::positive);
    CHECK(ctx.sign(unit_u2(), 2) == Sign::negative);
    CHECK(ctx.is_totally_positive(elem_beta()));
    CHECK(ctx.is_totally_positive(unit_u1().pow(2)));
    CHECK(!ctx.is_totally_positive(unit_u2()));
    // agreement with exact rational signs at all embeddings
    for (long n : {-7L, -1L, 0L, 2L, 9L})
        for (int e = 0; e < 3; ++e)
            CHECK(static_cast<int>(ctx.sign(Cyc::integer(n), e)) == (n > 0) - (n < 0));
}

TEST_CASE("certified comparison and floors") {
    CertifiedSignContext ctx;
    const Cyc& u2 = unit_u2();
    CHECK(ctx.compare(u2, Cyc::one()) > 0);
    CHECK(ctx.compare(unit_u1(), Cyc::one()) > 0);
    Cyc nine_u2sq = Cyc::integer(9) * u2.pow(2);
    CHECK(ctx.floor_ratio(nine_u2sq, nine_u2sq) == 1);
    // rational path
    CHECK(ctx.floor_ratio(Cyc::integer(7), Cyc::integer(2)) == 3);
    CHECK(ctx.floor_ratio(Cyc::integer(-7), Cyc::integer(2)) == -4);
    // irrational path: u2 ~ 2.879
    CHECK(ctx.floor_ratio(u2, Cyc::one()) == 2);
    CHECK(ctx.floor_ratio(u2 * u2, Cyc::one()) == 8);
    // exactly attained boundary: (3*u2)/u2 = 3
    CHECK(ctx.floor_ratio(Cyc::integer(3) * u2, u2) == 3);
}
