// Exact rational scalars. Values stay in a reduced int64 numerator/denominator
// pair while they fit and promote to BigInt arithmetic transparently when an
// intermediate would overflow. No rounding anywhere.
#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "ybalg/bigint.hpp"

namespace ybalg {

class Rat {
public:
    Rat() = default;
    Rat(long long n) : n_(n) {}
    Rat(long long n, long long d);
    static Rat from_big(BigInt num, BigInt den);

    bool is_zero() const { return big_ ? big_->num.is_zero() : n_ == 0; }
    bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
    int sign() const;

    bool is_small() const { return !big_; }
    long long num_i64() const { return n_; }    // valid when small
    long long den_i64() const { return d_; }    // valid when small
    const BigInt& num_big() const { return big_->num; }
    const BigInt& den_big() const { return big_->den; }

    Rat(const Rat& o) { copy_from(o); }
    Rat(Rat&&) noexcept = default;
    Rat& operator=(const Rat& o) {
        if (this != &o) copy_from(o);
        return *this;
    }
    Rat& operator=(Rat&&) noexcept = default;

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);
    Rat operator-() const;
    Rat inv() const;

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b);
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

    // "n" or "n/d", exact
    std::string to_string() const;

private:
    struct Big {
        BigInt num, den;  // den > 0, reduced
    };
    long long n_ = 0, d_ = 1;     // reduced, d_ > 0; used when big_ == nullptr
    std::unique_ptr<Big> big_;

    void copy_from(const Rat& o) {
        n_ = o.n_;
        d_ = o.d_;
        big_ = o.big_ ? std::make_unique<Big>(*o.big_) : nullptr;
    }
    static Rat make_small_i128(__int128 n, __int128 d);
    BigInt big_num() const { return big_ ? big_->num : BigInt(n_); }
    BigInt big_den() const { return big_ ? big_->den : BigInt(d_); }
};

}  // namespace ybalg
