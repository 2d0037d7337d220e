#include <doctest.h>

#include "field.hpp"
#include "rng.hpp"

#include <cstdint>
#include <vector>

using namespace pgarc;

namespace {

// Schoolbook polynomial arithmetic on digit vectors, reduced by the field's
// modulus. Shares no code with the table-based path; used as the oracle.
struct NaiveGF {
    uint32_t p, h;
    std::vector<uint32_t> mod;

    explicit NaiveGF(const Field& f) : p(f.p()), h(f.h()), mod(f.modulus()) {}

    std::vector<uint32_t> mul(const std::vector<uint32_t>& a,
                              const std::vector<uint32_t>& b) const {
        std::vector<uint32_t> r(2 * h, 0);
        for (uint32_t i = 0; i < h; ++i)
            for (uint32_t j = 0; j < h; ++j)
                r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        for (uint32_t d = 2 * h - 1; d >= h; --d) {
            uint32_t c = r[d];
            if (c == 0) continue;
            r[d] = 0;
            for (uint32_t i = 0; i < h; ++i)
                r[i + d - h] = (r[i + d - h] + (p - mod[i]) * c) % p;
        }
        r.resize(h);
        return r;
    }

    std::vector<uint32_t> one() const {
        std::vector<uint32_t> r(h, 0);
        r[0] = 1;
        return r;
    }
};

felem naive_mul(const Field& f, felem a, felem b) {
    NaiveGF ngf(f);
    return f.from_digits(ngf.mul(f.digits(a), f.digits(b)));
}

} // namespace

TEST_CASE("field creation is deterministic and matches hand-derived moduli") {
    struct Known {
        uint32_t p, h;
        std::vector<uint32_t> mod; // coefficient of x^i at index i
        felem xi;
    };
    // Moduli below were derived by hand: first monic primitive polynomial in
    // increasing order of the integer digit code (constant term least
    // significant), which minimizes the highest coefficients first.
    const std::vector<Known> known = {
        {7, 1, {4, 1}, 3},            // x - 3, smallest primitive root of 7
        {2, 2, {1, 1, 1}, 2},         // x^2+x+1
        {2, 3, {1, 1, 0, 1}, 2},      // x^3+x+1, not x^3+x^2+1
        {3, 2, {2, 1, 1}, 3},         // x^2+x+2
        {5, 2, {2, 1, 1}, 5},         // x^2+x+2
        {3, 3, {1, 2, 0, 1}, 3},      // x^3+2x+1
        {2, 5, {1, 0, 1, 0, 0, 1}, 2},// x^5+x^2+1
        {7, 2, {3, 1, 1}, 7},         // x^2+x+3
        {3, 4, {2, 1, 0, 0, 1}, 3},   // x^4+x+2
        {5, 3, {2, 3, 0, 1}, 5},      // x^3+3x+2
    };
    for (const auto& k : known) {
        CAPTURE(k.p);
        CAPTURE(k.h);
        Field f(k.p, k.h);
        CHECK(f.modulus() == k.mod);
        CHECK(f.xi() == k.xi);
    }
}

TEST_CASE("field creation rejects bad input") {
    CHECK_THROWS_AS(Field(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field(2, 21), std::invalid_argument);
    CHECK_THROWS_AS(field_of_order(6), std::invalid_argument);
    CHECK_THROWS_AS(field_of_order(12), std::invalid_argument);
    CHECK_NOTHROW(field_of_order(1u << 20));

    Field f4 = field_of_order(4);
    CHECK(f4.p() == 2);
    CHECK(f4.h() == 2);
    Field f343 = field_of_order(343);
    CHECK(f343.p() == 7);
    CHECK(f343.h() == 3);
}

TEST_CASE("pinned arithmetic values") {
    Field f7(7, 1);
    CHECK(f7.add(3, 5) == 1);
    CHECK(f7.mul(3, 5) == 1);
    CHECK(f7.xi() == 3);
    CHECK(f7.xi_pow(2) == 2); // 3^2 mod 7

    Field f8(2, 3);
    CHECK(f8.add(5, 5) == 0);
    CHECK(f8.inv(f8.xi()) == f8.xi_pow(6));

    Field f9(3, 2);
    CHECK(f9.neg(0) == 0);
    CHECK(f9.xi_pow(0) == 1);
    CHECK(f9.xi_pow(f9.q() - 1) == 1);
    CHECK(f9.xi_pow(-1) == f9.inv(f9.xi()));
}

TEST_CASE("zero handling is a hard error") {
    Field f(3, 2);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
    CHECK_THROWS_AS(f.div(1, 0), std::domain_error);
    CHECK_THROWS_AS(f.dlog(0), std::domain_error);
    CHECK(f.div(0, 2) == 0);
    CHECK(f.mul(5, 0) == 0);
}

TEST_CASE("table multiplication agrees with schoolbook polynomial oracle") {
    for (uint32_t q : {7u, 8u, 9u, 25u, 27u, 32u, 49u}) {
        CAPTURE(q);
        Field f = field_of_order(q);
        for (felem a = 0; a < q; ++a)
            for (felem b = 0; b < q; ++b)
                CHECK(f.mul(a, b) == naive_mul(f, a, b));
    }
    // spot-check a larger field
    Field f = field_of_order(343);
    Rng rng(42);
    for (int t = 0; t < 2000; ++t) {
        felem a = (felem)rng.below(343), b = (felem)rng.below(343);
        CHECK(f.mul(a, b) == naive_mul(f, a, b));
    }
}

TEST_CASE("xi powers match repeated naive multiplication") {
    for (uint32_t q : {8u, 9u, 27u, 32u, 49u, 81u, 125u}) {
        CAPTURE(q);
        Field f = field_of_order(q);
        NaiveGF ngf(f);
        auto cur = ngf.one();
        auto xid = f.digits(f.xi());
        for (uint32_t d = 0; d < q - 1; ++d) {
            CHECK(f.xi_pow(d) == f.from_digits(cur));
            CHECK(f.dlog(f.from_digits(cur)) == d);
            cur = ngf.mul(cur, xid);
        }
        CHECK(f.from_digits(cur) == 1); // xi^(q-1) closes the cycle
    }
}

TEST_CASE("prime fields multiply like integers mod p") {
    for (uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u,
                       41u, 43u, 47u, 53u, 59u, 61u, 67u, 71u, 73u, 79u, 83u,
                       89u, 97u, 101u}) {
        Field f(q, 1);
        for (felem a = 0; a < q; ++a)
            for (felem b = 0; b < q; ++b) {
                CHECK(f.mul(a, b) == a * b % q);
                CHECK(f.add(a, b) == (a + b) % q);
            }
    }
}

TEST_CASE("field axioms on random triples") {
    for (uint32_t q : {7u, 8u, 9u, 25u, 27u, 32u}) {
        CAPTURE(q);
        Field f = field_of_order(q);
        Rng rng(7 * q + 1);
        for (int t = 0; t < 500; ++t) {
            felem a = (felem)rng.below(q), b = (felem)rng.below(q),
                  c = (felem)rng.below(q);
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == 1);
                CHECK(f.div(b, a) == f.mul(b, f.inv(a)));
            }
        }
    }
}

TEST_CASE("xi_pow is a bijection onto the nonzero elements") {
    for (uint32_t q : {7u, 8u, 9u, 27u, 49u}) {
        Field f = field_of_order(q);
        std::vector<uint8_t> seen(q, 0);
        for (uint32_t d = 0; d + 1 < q; ++d) {
            felem v = f.xi_pow(d);
            CHECK(v != 0);
            CHECK(!seen[v]);
            seen[v] = 1;
            CHECK(f.dlog(v) == d);
        }
    }
}

TEST_CASE("digit round-trips") {
    Field f(3, 3);
    for (felem a = 0; a < f.q(); ++a) CHECK(f.from_digits(f.digits(a)) == a);
    CHECK_THROWS_AS(f.from_digits({3}), std::invalid_argument);
    CHECK_THROWS_AS(f.from_digits({0, 0, 0, 1}), std::invalid_argument);
}
