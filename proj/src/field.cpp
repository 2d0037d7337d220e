#include "field.hpp"

#include <algorithm>
#include <cstdint>

namespace pgarc {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool prime_power(uint64_t q, uint32_t& p, uint32_t& h) {
    if (q < 2) return false;
    uint64_t d = 2;
    while (d * d <= q && q % d != 0) ++d;
    uint64_t base = (d * d <= q) ? d : q;
    uint64_t rest = q;
    uint32_t e = 0;
    while (rest % base == 0) { rest /= base; ++e; }
    if (rest != 1) return false;
    p = (uint32_t)base;
    h = e;
    return true;
}

Field field_of_order(uint64_t q) {
    uint32_t p = 0, h = 0;
    if (!prime_power(q, p, h))
        throw std::invalid_argument("GF: " + std::to_string(q) + " is not a prime power");
    return Field(p, h);
}

namespace {

std::vector<uint32_t> prime_factors(uint32_t n) {
    std::vector<uint32_t> out;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

uint64_t powmod_int(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

uint32_t smallest_primitive_root(uint32_t p) {
    if (p == 2) return 1;
    auto rs = prime_factors(p - 1);
    for (uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (uint32_t r : rs)
            if (powmod_int(g, (p - 1) / r, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("GF: no primitive root found");
}

// Dense polynomials over GF(p), index i = coefficient of x^i.
using Poly = std::vector<uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

uint32_t invmod(uint32_t a, uint32_t p) { return (uint32_t)powmod_int(a, p - 2, p); }

Poly polmod(Poly a, const Poly& m, uint32_t p) {
    trim(a);
    size_t dm = m.size() - 1;
    while (a.size() > dm) {
        uint32_t c = a.back();
        size_t shift = a.size() - 1 - dm;
        if (c != 0) {
            uint32_t f = (uint32_t)((uint64_t)c * invmod(m.back(), p) % p);
            for (size_t i = 0; i <= dm; ++i) {
                uint64_t sub = (uint64_t)f * m[i] % p;
                a[i + shift] = (uint32_t)((a[i + shift] + p - sub) % p);
            }
        }
        a.pop_back();
        trim(a);
        if (a.size() <= dm) break;
    }
    trim(a);
    return a;
}

Poly polmulmod(const Poly& a, const Poly& b, const Poly& m, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (uint32_t)((r[i + j] + (uint64_t)a[i] * b[j]) % p);
    }
    return polmod(std::move(r), m, p);
}

Poly polpowmod(Poly b, uint64_t e, const Poly& m, uint32_t p) {
    Poly r{1};
    b = polmod(std::move(b), m, p);
    while (e) {
        if (e & 1) r = polmulmod(r, b, m, p);
        b = polmulmod(b, b, m, p);
        e >>= 1;
    }
    return r;
}

Poly polgcd(Poly a, Poly b, uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = polmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool poly_is_one(const Poly& a) { return a.size() == 1 && a[0] == 1; }

Poly poly_x() { return {0, 1}; }

// Rabin test: f (monic, degree h) is irreducible over GF(p) iff
// x^(p^h) == x mod f and gcd(x^(p^(h/r)) - x, f) = 1 for each prime r | h.
bool irreducible(const Poly& f, uint32_t p, uint32_t h) {
    Poly t = poly_x();
    for (auto r : prime_factors(h)) {
        Poly u = poly_x();
        for (uint32_t i = 0; i < h / r; ++i) u = polpowmod(std::move(u), p, f, p);
        // u = x^(p^(h/r)); gcd(u - x, f) must be trivial
        Poly diff = u;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        Poly g = polgcd(f, diff, p);
        if (g.size() != 1) return false; // any constant gcd is trivial
    }
    for (uint32_t i = 0; i < h; ++i) t = polpowmod(std::move(t), p, f, p);
    Poly x = poly_x();
    return t == x;
}

bool primitive(const Poly& f, uint32_t p, uint32_t h, uint64_t q) {
    if (f[0] == 0) return false; // divisible by x
    if (!irreducible(f, p, h)) return false;
    for (auto r : prime_factors((uint32_t)(q - 1))) {
        Poly t = polpowmod(poly_x(), (q - 1) / r, f, p);
        if (poly_is_one(t)) return false;
    }
    return true;
}

} // namespace

Field::Field(uint32_t p, uint32_t h) : p_(p), h_(h) {
    if (!is_prime(p)) throw std::invalid_argument("GF: " + std::to_string(p) + " is not prime");
    if (h < 1) throw std::invalid_argument("GF: extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < h; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("GF: order exceeds 2^20");
    }
    q_ = (uint32_t)q;

    if (h_ == 1) {
        xi_ = smallest_primitive_root(p_);
        poly_ = {(p_ - xi_) % p_, 1}; // x - xi
    } else {
        // First primitive monic polynomial in code order: the code enumerates
        // the low coefficients (c_0 .. c_{h-1}) as base-p digits.
        bool found = false;
        for (uint32_t code = 0; code < q_ && !found; ++code) {
            Poly f(h_ + 1, 0);
            uint32_t c = code;
            for (uint32_t i = 0; i < h_; ++i) { f[i] = c % p_; c /= p_; }
            f[h_] = 1;
            if (primitive(f, p_, h_, q_)) {
                poly_ = f;
                found = true;
            }
        }
        if (!found) throw std::logic_error("GF: no primitive polynomial found");
        xi_ = p_; // the class of x: digits (0, 1, 0, ...)
    }

    // Antilog table by repeated multiplication with xi, working on digit vectors.
    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, UINT32_MAX);
    std::vector<uint32_t> cur(h_, 0);
    cur[0] = 1;
    for (uint32_t k = 0; k < q_ - 1; ++k) {
        uint32_t code = 0;
        for (uint32_t i = h_; i-- > 0;) code = code * p_ + cur[i];
        if (code == 0 || log_[code] != UINT32_MAX)
            throw std::logic_error("GF: modulus is not primitive");
        exp_[k] = code;
        exp_[k + q_ - 1] = code;
        log_[code] = k;

        if (h_ == 1) {
            cur[0] = (uint32_t)((uint64_t)cur[0] * xi_ % p_);
        } else {
            // multiply by x, then reduce by the monic modulus
            uint32_t carry = cur[h_ - 1];
            for (uint32_t i = h_; i-- > 1;) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (carry != 0) {
                for (uint32_t i = 0; i < h_; ++i) {
                    uint64_t sub = (uint64_t)carry * poly_[i] % p_;
                    cur[i] = (uint32_t)((cur[i] + p_ - sub) % p_);
                }
            }
        }
    }
}

felem Field::digit_combine(felem a, felem b, bool subtract) const {
    felem out = 0;
    uint32_t mult = 1;
    for (uint32_t i = 0; i < h_; ++i) {
        uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        uint32_t d = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
        out += d * mult;
        mult *= p_;
    }
    return out;
}

std::vector<uint32_t> Field::digits(felem a) const {
    std::vector<uint32_t> d(h_);
    for (uint32_t i = 0; i < h_; ++i) { d[i] = a % p_; a /= p_; }
    return d;
}

felem Field::from_digits(const std::vector<uint32_t>& d) const {
    if (d.size() > h_) throw std::invalid_argument("GF: too many digits");
    felem code = 0;
    for (size_t i = d.size(); i-- > 0;) {
        if (d[i] >= p_) throw std::invalid_argument("GF: digit out of range");
        code = code * p_ + d[i];
    }
    return code;
}

} // namespace pgarc
