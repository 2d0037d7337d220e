// Arithmetic in GF(q), q = p^h, q <= 2^20, with log/antilog tables.
//
// Elements are stored as integer codes in [0, q): the base-p digit encoding of
// the coefficient vector, constant term in the least significant digit. For
// h = 1 the code is just the residue mod p.
//
// The representation is deterministic. For h > 1 the modulus is the first
// primitive monic polynomial of degree h in increasing code order (code of a
// polynomial = its digit encoding), and xi is the class of x. For h = 1, xi is
// the smallest primitive root of p. Every build therefore agrees on the value
// of xi^d for all d, which matters because the conic constructions index
// points by powers of xi.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgarc {

using felem = uint32_t;

bool is_prime(uint64_t n);
// Factors q as p^h. Returns false if q is not a prime power.
bool prime_power(uint64_t q, uint32_t& p, uint32_t& h);

class Field;
// Factors q and builds the field; throws if q is not a prime power <= 2^20.
Field field_of_order(uint64_t q);

class Field {
public:
    static constexpr uint64_t kMaxOrder = 1u << 20;

    Field(uint32_t p, uint32_t h);

    uint32_t p() const { return p_; }
    uint32_t h() const { return h_; }
    uint32_t q() const { return q_; }
    felem xi() const { return xi_; }
    // Modulus coefficients, index i = coefficient of x^i, size h+1, monic.
    const std::vector<uint32_t>& modulus() const { return poly_; }

    felem add(felem a, felem b) const {
        if (h_ == 1) { uint32_t s = a + b; return s >= p_ ? s - p_ : s; }
        if (p_ == 2) return a ^ b;
        return digit_combine(a, b, false);
    }
    felem sub(felem a, felem b) const {
        if (h_ == 1) return a >= b ? a - b : a + p_ - b;
        if (p_ == 2) return a ^ b;
        return digit_combine(a, b, true);
    }
    felem neg(felem a) const { return sub(0, a); }

    felem mul(felem a, felem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    felem inv(felem a) const {
        if (a == 0) throw std::domain_error("GF: inverse of zero");
        return exp_[q_ - 1 - log_[a]];
    }
    felem div(felem a, felem b) const {
        if (b == 0) throw std::domain_error("GF: division by zero");
        if (a == 0) return 0;
        return exp_[log_[a] + q_ - 1 - log_[b]];
    }

    // xi^d with d taken mod q-1; negative d allowed.
    felem xi_pow(int64_t d) const {
        int64_t m = d % (int64_t)(q_ - 1);
        if (m < 0) m += q_ - 1;
        return exp_[m];
    }
    uint32_t dlog(felem a) const {
        if (a == 0) throw std::domain_error("GF: dlog of zero");
        return log_[a];
    }

    // Embedding of the prime subfield: n mod p as an element.
    felem scalar(uint64_t n) const { return (felem)(n % p_); }

    std::vector<uint32_t> digits(felem a) const;
    felem from_digits(const std::vector<uint32_t>& d) const;

private:
    felem digit_combine(felem a, felem b, bool subtract) const;

    uint32_t p_ = 0, h_ = 0, q_ = 0;
    felem xi_ = 0;
    std::vector<uint32_t> poly_;
    std::vector<felem> exp_; // size 2(q-1), exp_[k] = xi^k, doubled so mul skips a reduction
    std::vector<uint32_t> log_;
};

} // namespace pgarc
