#include "ybalg/rational.hpp"

#include <stdexcept>

namespace ybalg {

namespace {

__int128 gcd_i128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits_i64(__int128 v) {
    return v >= static_cast<__int128>(INT64_MIN) && v <= static_cast<__int128>(INT64_MAX);
}

}  // namespace

Rat Rat::make_small_i128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rat: division by zero");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rat();
    __int128 g = gcd_i128(n, d);
    n /= g;
    d /= g;
    Rat r;
    if (fits_i64(n) && fits_i64(d)) {
        r.n_ = static_cast<long long>(n);
        r.d_ = static_cast<long long>(d);
    } else {
        r.big_ = std::make_unique<Big>(Big{BigInt(n), BigInt(d)});
    }
    return r;
}

Rat Rat::from_big(BigInt num, BigInt den) {
    if (den.is_zero()) throw std::domain_error("Rat: division by zero");
    if (den.sign() < 0) {
        num = -num;
        den = -den;
    }
    if (num.is_zero()) return Rat();
    BigInt g = BigInt::gcd(num, den);
    num = num / g;
    den = den / g;
    Rat r;
    if (num.fits_i64() && den.fits_i64()) {
        r.n_ = num.to_i64();
        r.d_ = den.to_i64();
    } else {
        r.big_ = std::make_unique<Big>(Big{std::move(num), std::move(den)});
    }
    return r;
}

Rat::Rat(long long n, long long d) { *this = make_small_i128(n, d); }

int Rat::sign() const {
    if (big_) return big_->num.sign();
    return n_ < 0 ? -1 : (n_ > 0 ? 1 : 0);
}

Rat operator+(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_) {
        __int128 n = static_cast<__int128>(a.n_) * b.d_ + static_cast<__int128>(b.n_) * a.d_;
        __int128 d = static_cast<__int128>(a.d_) * b.d_;
        return Rat::make_small_i128(n, d);
    }
    return Rat::from_big(a.big_num() * b.big_den() + b.big_num() * a.big_den(),
                         a.big_den() * b.big_den());
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_) {
        __int128 n = static_cast<__int128>(a.n_) * b.n_;
        __int128 d = static_cast<__int128>(a.d_) * b.d_;
        return Rat::make_small_i128(n, d);
    }
    return Rat::from_big(a.big_num() * b.big_num(), a.big_den() * b.big_den());
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("Rat: division by zero");
    if (!a.big_ && !b.big_) {
        __int128 n = static_cast<__int128>(a.n_) * b.d_;
        __int128 d = static_cast<__int128>(a.d_) * b.n_;
        return Rat::make_small_i128(n, d);
    }
    return Rat::from_big(a.big_num() * b.big_den(), a.big_den() * b.big_num());
}

Rat Rat::operator-() const {
    Rat r = *this;
    if (r.big_) {
        r.big_->num = -r.big_->num;
    } else {
        r.n_ = -r.n_;
    }
    return r;
}

Rat Rat::inv() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    if (!big_) return make_small_i128(d_, n_);
    return from_big(big_->den, big_->num);
}

bool operator==(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    return BigInt::cmp(a.big_num(), b.big_num()) == 0 && BigInt::cmp(a.big_den(), b.big_den()) == 0;
}

std::string Rat::to_string() const {
    if (big_) {
        std::string s = big_->num.to_string();
        if (!(big_->den.fits_i64() && big_->den.to_i64() == 1)) s += "/" + big_->den.to_string();
        return s;
    }
    std::string s = std::to_string(n_);
    if (d_ != 1) s += "/" + std::to_string(d_);
    return s;
}

}  // namespace ybalg
