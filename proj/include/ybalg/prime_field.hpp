// Z/p arithmetic for the modular rank backend. Default prime 2^31 - 1.
#pragma once

#include <cstdint>
#include <stdexcept>

namespace ybalg {

inline constexpr uint64_t kDefaultPrime = 2147483647ull;

struct PrimeField {
    uint64_t p = kDefaultPrime;

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p - a; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    uint64_t inv(uint64_t a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        // extended Euclid
        int64_t t = 0, newt = 1;
        int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a);
        while (newr != 0) {
            int64_t q = r / newr;
            int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += static_cast<int64_t>(p);
        return static_cast<uint64_t>(t);
    }
    uint64_t from_i64(long long v) const {
        long long m = v % static_cast<long long>(p);
        if (m < 0) m += static_cast<long long>(p);
        return static_cast<uint64_t>(m);
    }
};

}  // namespace ybalg
