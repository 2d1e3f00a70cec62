// Arbitrary-precision signed integers, base 2^32 sign-magnitude.
// Only the operations the rational layer needs: ring arithmetic, divmod, gcd.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace ybalg {

class BigInt {
public:
    BigInt() = default;
    BigInt(int v) { assign_i64(v); }
    BigInt(long long v) { assign_i64(v); }
    explicit BigInt(__int128 v) { assign_i128(v); }

    bool is_zero() const { return mag_.empty(); }
    int sign() const { return mag_.empty() ? 0 : sign_; }

    // |*this| fits in a signed 64-bit value
    bool fits_i64() const;
    long long to_i64() const;

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.mag_.empty()) r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // truncated division, remainder has the sign of the dividend
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& b) const;
    BigInt operator%(const BigInt& b) const;

    static BigInt gcd(BigInt a, BigInt b);

    static int cmp(const BigInt& a, const BigInt& b);
    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }

    std::string to_string() const;

private:
    int8_t sign_ = 1;                 // meaningful only when mag_ nonempty
    std::vector<uint32_t> mag_;       // little-endian limbs, no trailing zeros

    void assign_i64(long long v) { assign_i128(static_cast<__int128>(v)); }
    void assign_i128(__int128 v);
    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace ybalg
