// Exact integer and rational arithmetic for the routing library.
//
// Wide is a sign+magnitude integer with inline storage for small values;
// Rat is a normalized fraction on top of it.  Division of magnitudes is
// only needed by single-limb divisors (printing), so gcd uses the binary
// algorithm and no general bignum division is implemented.

#ifndef GFR_RATIONAL_HPP
#define GFR_RATIONAL_HPP

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gfr {

class Wide {
public:
    Wide() = default;
    Wide(long long v) {
        if (v < 0) { neg_ = true; push(static_cast<uint64_t>(-(v + 1)) + 1); }
        else if (v > 0) { push(static_cast<uint64_t>(v)); }
    }

    Wide(const Wide& o) { copy_from(o); }
    Wide(Wide&& o) noexcept { move_from(std::move(o)); }
    Wide& operator=(const Wide& o) {
        if (this != &o) { release(); copy_from(o); }
        return *this;
    }
    Wide& operator=(Wide&& o) noexcept {
        if (this != &o) { release(); move_from(std::move(o)); }
        return *this;
    }
    ~Wide() { release(); }

    bool is_zero() const { return size_ == 0; }
    bool negative() const { return neg_; }
    int sign() const { return size_ == 0 ? 0 : (neg_ ? -1 : 1); }

    uint32_t nlimbs() const { return size_; }

    bool fits_ll() const {
        return size_ == 0 ||
               (size_ == 1 && limb(0) <= (neg_ ? 0x8000000000000000ull : 0x7fffffffffffffffull));
    }
    long long as_ll() const {
        if (size_ == 0) return 0;
        uint64_t m = limb(0);
        return neg_ ? -static_cast<long long>(m - 1) - 1 : static_cast<long long>(m);
    }

    static int cmp_mag(const Wide& a, const Wide& b) {
        if (a.size_ != b.size_) return a.size_ < b.size_ ? -1 : 1;
        for (uint32_t i = a.size_; i-- > 0;)
            if (a.limb(i) != b.limb(i)) return a.limb(i) < b.limb(i) ? -1 : 1;
        return 0;
    }
    static int cmp(const Wide& a, const Wide& b) {
        if (a.sign() != b.sign()) return a.sign() < b.sign() ? -1 : 1;
        int m = cmp_mag(a, b);
        return a.neg_ ? -m : m;
    }

    friend bool operator==(const Wide& a, const Wide& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Wide& a, const Wide& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Wide& a, const Wide& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Wide& a, const Wide& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Wide& a, const Wide& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Wide& a, const Wide& b) { return cmp(a, b) >= 0; }

    Wide operator-() const {
        Wide r(*this);
        if (r.size_ != 0) r.neg_ = !r.neg_;
        return r;
    }

    friend Wide operator+(const Wide& a, const Wide& b) {
        Wide r;
        if (a.neg_ == b.neg_) { add_mag(r, a, b); r.neg_ = a.neg_ && r.size_ != 0; }
        else {
            int c = cmp_mag(a, b);
            if (c == 0) return r;
            if (c > 0) { sub_mag(r, a, b); r.neg_ = a.neg_; }
            else       { sub_mag(r, b, a); r.neg_ = b.neg_; }
        }
        return r;
    }
    friend Wide operator-(const Wide& a, const Wide& b) { return a + (-b); }

    friend Wide operator*(const Wide& a, const Wide& b) {
        Wide r;
        if (a.size_ == 0 || b.size_ == 0) return r;
        if (a.size_ == 1 && b.size_ == 1) {
            unsigned __int128 p = static_cast<unsigned __int128>(a.limb(0)) * b.limb(0);
            r.push(static_cast<uint64_t>(p));
            uint64_t hi = static_cast<uint64_t>(p >> 64);
            if (hi) r.push(hi);
        } else {
            r.resize(a.size_ + b.size_);
            for (uint32_t i = 0; i < a.size_; ++i) {
                uint64_t carry = 0;
                for (uint32_t j = 0; j < b.size_; ++j) {
                    unsigned __int128 cur = static_cast<unsigned __int128>(a.limb(i)) * b.limb(j) +
                                            r.limb(i + j) + carry;
                    r.set_limb(i + j, static_cast<uint64_t>(cur));
                    carry = static_cast<uint64_t>(cur >> 64);
                }
                r.set_limb(i + b.size_, r.limb(i + b.size_) + carry);
            }
            r.trim();
        }
        r.neg_ = (a.neg_ != b.neg_) && r.size_ != 0;
        return r;
    }

    Wide& operator+=(const Wide& b) { *this = *this + b; return *this; }
    Wide& operator-=(const Wide& b) { *this = *this - b; return *this; }
    Wide& operator*=(const Wide& b) { *this = *this * b; return *this; }

    // Divides magnitude by a single 64-bit divisor; returns remainder.
    uint64_t divmod_u64(uint64_t div) {
        if (div == 0) throw std::domain_error("division by zero");
        unsigned __int128 rem = 0;
        for (uint32_t i = size_; i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | limb(i);
            set_limb(i, static_cast<uint64_t>(cur / div));
            rem = cur % div;
        }
        trim();
        if (size_ == 0) neg_ = false;
        return static_cast<uint64_t>(rem);
    }

    bool is_even() const { return size_ == 0 || (limb(0) & 1u) == 0; }

    void shr1() {
        for (uint32_t i = 0; i < size_; ++i) {
            uint64_t lo = limb(i) >> 1;
            if (i + 1 < size_ && (limb(i + 1) & 1u)) lo |= 0x8000000000000000ull;
            set_limb(i, lo);
        }
        trim();
        if (size_ == 0) neg_ = false;
    }
    void shl1() {
        uint64_t carry = 0;
        for (uint32_t i = 0; i < size_; ++i) {
            uint64_t v = limb(i);
            set_limb(i, (v << 1) | carry);
            carry = v >> 63;
        }
        if (carry) push(carry);
    }

    bool fits_u128() const { return size_ <= 2; }
    unsigned __int128 mag_u128() const {
        unsigned __int128 v = 0;
        if (size_ > 1) v = static_cast<unsigned __int128>(limb(1)) << 64;
        if (size_ > 0) v |= limb(0);
        return v;
    }
    static Wide from_u128(unsigned __int128 v, bool neg = false) {
        Wide r;
        if (v) r.push(static_cast<uint64_t>(v));
        if (v >> 64) r.push(static_cast<uint64_t>(v >> 64));
        r.neg_ = neg && r.size_ != 0;
        return r;
    }

    static Wide gcd(Wide a, Wide b) {
        a.neg_ = false; b.neg_ = false;
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.fits_u128() && b.fits_u128()) {
            unsigned __int128 x = a.mag_u128(), y = b.mag_u128();
            while (y) { unsigned __int128 t = x % y; x = y; y = t; }
            return from_u128(x);
        }
        int shift = 0;
        while (a.is_even() && b.is_even()) { a.shr1(); b.shr1(); ++shift; }
        while (a.is_even()) a.shr1();
        while (!b.is_zero()) {
            while (b.is_even()) b.shr1();
            if (cmp_mag(a, b) > 0) std::swap(a, b);
            Wide t;
            sub_mag(t, b, a);
            b = std::move(t);
        }
        while (shift--) a.shl1();
        return a;
    }

    // Exact quotient a / b, requires b | a and b != 0.
    static Wide div_exact(const Wide& a, const Wide& b) {
        if (a.is_zero()) return Wide();
        bool neg = a.negative() != b.negative();
        if (a.fits_u128() && b.fits_u128())
            return from_u128(a.mag_u128() / b.mag_u128(), neg);
        Wide rem(a), d(b);
        rem.neg_ = false; d.neg_ = false;
        int shift = 0;
        while (d.is_even()) { d.shr1(); rem.shr1(); ++shift; }
        (void)shift;
        // Jebelean exact division: invert the low limb mod 2^64 and peel
        // quotient limbs from the bottom.
        uint64_t d0 = d.limb(0);
        uint64_t inv = d0;
        for (int it = 0; it < 5; ++it) inv *= 2 - d0 * inv;
        Wide q;
        uint32_t qlen = rem.size_ >= d.size_ ? rem.size_ - d.size_ + 1 : 1;
        q.resize(qlen);
        for (uint32_t i = 0; i < qlen; ++i) {
            uint64_t cur = i < rem.size_ ? rem.limb(i) : 0;
            uint64_t qi = cur * inv;
            q.set_limb(i, qi);
            if (qi == 0) continue;
            // rem -= (d * qi) << (64 * i)
            Wide t = d * from_u128(qi);
            uint64_t borrow = 0;
            for (uint32_t j = 0; j < t.size_ || borrow; ++j) {
                uint32_t k = i + j;
                if (k >= rem.size_) rem.resize(k + 1);
                uint64_t sub = (j < t.size_ ? t.limb(j) : 0);
                uint64_t s1 = sub + borrow;
                uint64_t av = rem.limb(k);
                uint64_t nb = (s1 < sub) || (av < s1) ? 1 : 0;
                rem.set_limb(k, av - s1);
                borrow = nb;
            }
        }
        q.trim();
        q.neg_ = neg && q.size_ != 0;
        return q;
    }

    double to_double() const {
        double m = 0;
        for (uint32_t i = size_; i-- > 0;) m = m * 18446744073709551616.0 + static_cast<double>(limb(i));
        return neg_ ? -m : m;
    }

    std::string str() const {
        if (size_ == 0) return "0";
        Wide t(*this);
        std::string out;
        while (!t.is_zero()) {
            uint64_t r = t.divmod_u64(1000000000000000000ull);
            std::string chunk = std::to_string(r);
            if (!t.is_zero()) chunk.insert(0, 18 - chunk.size(), '0');
            out.insert(0, chunk);
        }
        if (neg_) out.insert(0, 1, '-');
        return out;
    }

    static Wide parse(std::string_view s) {
        Wide r;
        bool neg = false;
        size_t i = 0;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) { neg = s[i] == '-'; ++i; }
        if (i == s.size()) throw std::invalid_argument("empty integer");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad digit in integer");
            r.mul_add_u64(10, static_cast<uint64_t>(s[i] - '0'));
        }
        r.neg_ = neg && r.size_ != 0;
        return r;
    }

    // Exact square root; returns false when the value is not a perfect square.
    static bool sqrt_exact(const Wide& v, Wide& out) {
        if (v.negative()) return false;
        if (v.is_zero()) { out = Wide(); return true; }
        Wide lo(1), hi(1);
        while (cmp_mag(hi * hi, v) < 0) hi.shl1();
        while (cmp_mag(lo, hi) < 0) {
            Wide mid = lo + hi;
            Wide one(1);
            mid += one;
            mid.shr1();
            if (cmp_mag(mid * mid, v) <= 0) lo = mid; else { hi = mid; hi -= one; }
        }
        if (lo * lo == v) { out = lo; return true; }
        return false;
    }

private:
    static constexpr uint32_t kInline = 3;

    uint32_t size_ = 0;
    uint32_t cap_ = kInline;
    bool neg_ = false;
    union {
        uint64_t inl_[kInline];
        uint64_t* heap_;
    };

    bool on_heap() const { return cap_ > kInline; }
    const uint64_t* data() const { return on_heap() ? heap_ : inl_; }
    uint64_t* data() { return on_heap() ? heap_ : inl_; }
    uint64_t limb(uint32_t i) const { return data()[i]; }
    void set_limb(uint32_t i, uint64_t v) { data()[i] = v; }

    void release() {
        if (on_heap()) std::free(heap_);
        size_ = 0;
        cap_ = kInline;
        neg_ = false;
    }
    void copy_from(const Wide& o) {
        size_ = o.size_;
        neg_ = o.neg_;
        if (o.on_heap()) {
            cap_ = o.cap_;
            heap_ = static_cast<uint64_t*>(std::malloc(sizeof(uint64_t) * cap_));
            std::memcpy(heap_, o.heap_, sizeof(uint64_t) * size_);
        } else {
            cap_ = kInline;
            std::memcpy(inl_, o.inl_, sizeof(inl_));
        }
    }
    void move_from(Wide&& o) {
        size_ = o.size_;
        cap_ = o.cap_;
        neg_ = o.neg_;
        if (o.on_heap()) heap_ = o.heap_;
        else std::memcpy(inl_, o.inl_, sizeof(inl_));
        o.size_ = 0;
        o.cap_ = kInline;
        o.neg_ = false;
    }
    void reserve(uint32_t n) {
        if (n <= cap_) return;
        uint32_t ncap = cap_ * 2 < n ? n : cap_ * 2;
        uint64_t* nh = static_cast<uint64_t*>(std::malloc(sizeof(uint64_t) * ncap));
        std::memcpy(nh, data(), sizeof(uint64_t) * size_);
        if (on_heap()) std::free(heap_);
        heap_ = nh;
        cap_ = ncap;
    }
    void resize(uint32_t n) {
        reserve(n);
        for (uint32_t i = size_; i < n; ++i) set_limb(i, 0);
        size_ = n;
    }
    void push(uint64_t v) {
        reserve(size_ + 1);
        data()[size_++] = v;
    }
    void trim() {
        while (size_ > 0 && limb(size_ - 1) == 0) --size_;
    }
    void mul_add_u64(uint64_t m, uint64_t add) {
        uint64_t carry = add;
        for (uint32_t i = 0; i < size_; ++i) {
            unsigned __int128 cur = static_cast<unsigned __int128>(limb(i)) * m + carry;
            set_limb(i, static_cast<uint64_t>(cur));
            carry = static_cast<uint64_t>(cur >> 64);
        }
        if (carry) push(carry);
    }

    static void add_mag(Wide& r, const Wide& a, const Wide& b) {
        const Wide& big = a.size_ >= b.size_ ? a : b;
        const Wide& sml = a.size_ >= b.size_ ? b : a;
        r.resize(big.size_);
        uint64_t carry = 0;
        for (uint32_t i = 0; i < big.size_; ++i) {
            unsigned __int128 cur = static_cast<unsigned __int128>(big.limb(i)) + carry +
                                    (i < sml.size_ ? sml.limb(i) : 0);
            r.set_limb(i, static_cast<uint64_t>(cur));
            carry = static_cast<uint64_t>(cur >> 64);
        }
        if (carry) r.push(carry);
    }
    // Requires |a| >= |b|.
    static void sub_mag(Wide& r, const Wide& a, const Wide& b) {
        r.resize(a.size_);
        uint64_t borrow = 0;
        for (uint32_t i = 0; i < a.size_; ++i) {
            uint64_t bv = i < b.size_ ? b.limb(i) : 0;
            uint64_t av = a.limb(i);
            uint64_t sub = bv + borrow;
            uint64_t nb = (av < bv) || (sub < bv) || (av < sub) ? 1 : 0;
            r.set_limb(i, av - sub);
            borrow = nb;
        }
        r.trim();
    }
};

// Normalized rational: denominator positive, gcd(num, den) = 1.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long v) : num_(v), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }
    Rat(Wide n, Wide d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const Wide& num() const { return num_; }
    const Wide& den() const { return den_; }
    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_.is_zero(); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("rational division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rat operator-() const {
        Rat r(*this);
        r.num_ = -r.num_;
        return r;
    }
    Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
    Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }
    Rat& operator*=(const Rat& b) { *this = *this * b; return *this; }
    Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }

    static int cmp(const Rat& a, const Rat& b) {
        if (a.num_.sign() != b.num_.sign())
            return a.num_.sign() < b.num_.sign() ? -1 : 1;
        if (a.num_.nlimbs() <= 1 && a.den_.nlimbs() <= 1 &&
            b.num_.nlimbs() <= 1 && b.den_.nlimbs() <= 1) {
            unsigned __int128 lhs = a.num_.mag_u128() * b.den_.mag_u128();
            unsigned __int128 rhs = b.num_.mag_u128() * a.den_.mag_u128();
            int m = lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
            return a.num_.negative() ? -m : m;
        }
        return Wide::cmp(a.num_ * b.den_, b.num_ * a.den_);
    }
    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a, b) >= 0; }

    // Value reduced into [0, 1); requires a bounded quotient in practice.
    Rat mod1() const {
        Rat r(*this);
        Rat one(1);
        while (r.sign() < 0) r += one;
        while (cmp(r, one) >= 0) r -= one;
        return r;
    }

    double to_double() const { return num_.to_double() / den_.to_double(); }

    // Canonical form "p/q" with q > 0 and gcd(p, q) = 1.
    std::string str() const { return num_.str() + "/" + den_.str(); }

    static Rat parse(std::string_view s) {
        size_t slash = s.find('/');
        if (slash == std::string_view::npos) return Rat(Wide::parse(s), Wide(1));
        return Rat(Wide::parse(s.substr(0, slash)), Wide::parse(s.substr(slash + 1)));
    }

    // Exact square root of a nonnegative rational; false when irrational.
    static bool sqrt_exact(const Rat& v, Rat& out) {
        Wide n, d;
        if (!Wide::sqrt_exact(v.num_.negative() ? -v.num_ : v.num_, n)) return false;
        if (v.sign() < 0) return false;
        if (!Wide::sqrt_exact(v.den_, d)) return false;
        out = Rat(std::move(n), std::move(d));
        return true;
    }

private:
    Wide num_, den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        if (den_.negative()) { num_ = -num_; den_ = -den_; }
        if (num_.is_zero()) { den_ = Wide(1); return; }
        Wide g = Wide::gcd(num_, den_);
        if (!(g == Wide(1))) {
            num_ = Wide::div_exact(num_, g);
            den_ = Wide::div_exact(den_, g);
        }
    }
};

}  // namespace gfr

#endif  // GFR_RATIONAL_HPP
