#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace drincert {

// Exact rational with a distinguished +infinity (absorbing for +, identity for min).
// Valuations of zero ring elements are +infinity; everything else stays finite and
// small at desk scale, but intermediates are guarded through 128-bit arithmetic.
class Rat {
public:
    Rat() : num_(0), den_(1), inf_(false) {}
    Rat(long long n) : num_(n), den_(1), inf_(false) {}
    Rat(long long n, long long d) : num_(n), den_(d), inf_(false) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        normalize();
    }

    static Rat infinity() {
        Rat r;
        r.inf_ = true;
        return r;
    }

    bool is_infinite() const { return inf_; }
    long long num() const { return num_; }
    long long den() const { return den_; }

    Rat operator+(const Rat& o) const {
        if (inf_ || o.inf_) return infinity();
        __int128 n = (__int128)num_ * o.den_ + (__int128)o.num_ * den_;
        __int128 d = (__int128)den_ * o.den_;
        return from128(n, d);
    }
    Rat operator-() const {
        if (inf_) throw std::domain_error("Rat: -infinity not represented");
        Rat r(*this);
        r.num_ = -r.num_;
        return r;
    }
    Rat operator-(const Rat& o) const { return *this + (-o); }
    Rat operator*(const Rat& o) const {
        if (inf_ || o.inf_) {
            if ((!inf_ && num_ == 0) || (!o.inf_ && o.num_ == 0))
                throw std::domain_error("Rat: 0 * infinity");
            return infinity();
        }
        return from128((__int128)num_ * o.num_, (__int128)den_ * o.den_);
    }
    Rat operator/(const Rat& o) const {
        if (o.inf_) throw std::domain_error("Rat: division by infinity");
        if (o.num_ == 0) throw std::domain_error("Rat: division by zero");
        if (inf_) return infinity();
        return from128((__int128)num_ * o.den_, (__int128)den_ * o.num_);
    }

    bool operator==(const Rat& o) const {
        if (inf_ || o.inf_) return inf_ == o.inf_;
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
    }
    bool operator<=(const Rat& o) const { return *this < o || *this == o; }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator>=(const Rat& o) const { return o <= *this; }

    std::string str() const {
        if (inf_) return "inf";
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    static Rat from128(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rat: value out of 64-bit range");
        Rat r;
        r.num_ = (long long)n;
        r.den_ = (long long)d;
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_, den_;
    bool inf_;
};

}  // namespace drincert
