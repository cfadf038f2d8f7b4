#include "hecke/rational.hpp"

#include <limits>
#include <stdexcept>

namespace hecke {

namespace {

using int128 = __int128;
using uint128 = unsigned __int128;

constexpr long long kMin = std::numeric_limits<long long>::min();
constexpr long long kMax = std::numeric_limits<long long>::max();

uint128 uabs(int128 x) { return x < 0 ? static_cast<uint128>(-x) : static_cast<uint128>(x); }

uint128 gcd128(uint128 a, uint128 b) {
    while (b != 0) {
        const uint128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(int128 x) { return x >= static_cast<int128>(kMin) && x <= static_cast<int128>(kMax); }

Integer to_mpz(int128 x) {
    const bool neg = x < 0;
    const uint128 u = uabs(x);
    Integer hi(static_cast<unsigned long>(u >> 64));
    hi <<= 64;
    hi += static_cast<unsigned long>(u & 0xffffffffffffffffULL);
    return neg ? Integer(-hi) : hi;
}

mpq_class make_mpq(int128 n, int128 d) {
    mpq_class q(to_mpz(n), to_mpz(d));
    q.canonicalize();
    return q;
}

}  // namespace

void Rational::set_small_reduced(int128 n, int128 d) {
    // d != 0; sign moves to the numerator, the fraction is reduced, and the
    // result falls back to GMP when it cannot fit.
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    if (d != 1) {
        const uint128 un = uabs(n);
        const uint128 ud = static_cast<uint128>(d);
        uint128 g;
        if ((un >> 64) == 0 && (ud >> 64) == 0) {
            // 64-bit gcd; the 128-bit modulo loop is much slower.
            unsigned long long a = static_cast<unsigned long long>(un);
            unsigned long long b = static_cast<unsigned long long>(ud);
            while (b != 0) {
                const unsigned long long t = a % b;
                a = b;
                b = t;
            }
            g = a;
        } else {
            g = gcd128(un, ud);
        }
        if (g > 1) {
            n /= static_cast<int128>(g);
            d /= static_cast<int128>(g);
        }
    }
    if (fits64(n) && fits64(d)) {
        num_ = static_cast<long long>(n);
        den_ = static_cast<long long>(d);
        big_.reset();
    } else {
        big_ = std::make_unique<mpq_class>(make_mpq(n, d));
    }
}

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    set_small_reduced(n, d);
}

Rational::Rational(const Integer& n, const Integer& d) {
    if (::sgn(d) == 0) throw std::invalid_argument("Rational: zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    big_ = std::make_unique<mpq_class>(std::move(q));
    shrink();
}

Rational::Rational(const mpq_class& q) : big_(std::make_unique<mpq_class>(q)) {
    shrink();
}

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
    if (this == &o) return *this;
    num_ = o.num_;
    den_ = o.den_;
    big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    return *this;
}

void Rational::promote() {
    if (!big_) big_ = std::make_unique<mpq_class>(make_mpq(num_, den_));
}

void Rational::shrink() {
    if (!big_) return;
    const mpq_class& q = *big_;
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
        big_.reset();
    }
}

int Rational::sgn() const {
    if (big_) return ::sgn(*big_);
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

Integer Rational::get_num() const {
    if (big_) return big_->get_num();
    return Integer(static_cast<long>(num_));
}

Integer Rational::get_den() const {
    if (big_) return big_->get_den();
    return Integer(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return make_mpq(num_, den_);
}

std::string Rational::get_str() const {
    if (big_) return big_->get_str();
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
}

Rational Rational::operator-() const {
    Rational r = *this;
    if (r.big_) {
        *r.big_ = -*r.big_;
        r.shrink();
    } else {
        // -kMin does not fit; route through the 128-bit normalizer.
        r.set_small_reduced(-static_cast<int128>(num_), den_);
    }
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (small() && o.small()) {
        if (den_ == 1 && o.den_ == 1) {
            long long r;
            if (!__builtin_add_overflow(num_, o.num_, &r)) {
                num_ = r;
                return *this;
            }
        }
        const int128 n =
            static_cast<int128>(num_) * o.den_ + static_cast<int128>(o.num_) * den_;
        const int128 d = static_cast<int128>(den_) * o.den_;
        set_small_reduced(n, d);
        return *this;
    }
    promote();
    *big_ += o.to_mpq();
    shrink();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (small() && o.small()) {
        if (den_ == 1 && o.den_ == 1) {
            long long r;
            if (!__builtin_sub_overflow(num_, o.num_, &r)) {
                num_ = r;
                return *this;
            }
        }
        const int128 n =
            static_cast<int128>(num_) * o.den_ - static_cast<int128>(o.num_) * den_;
        const int128 d = static_cast<int128>(den_) * o.den_;
        set_small_reduced(n, d);
        return *this;
    }
    promote();
    *big_ -= o.to_mpq();
    shrink();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    if (small() && o.small()) {
        if (den_ == 1 && o.den_ == 1) {
            long long r;
            if (!__builtin_mul_overflow(num_, o.num_, &r)) {
                num_ = r;
                return *this;
            }
        }
        const int128 n = static_cast<int128>(num_) * o.num_;
        const int128 d = static_cast<int128>(den_) * o.den_;
        set_small_reduced(n, d);
        return *this;
    }
    promote();
    *big_ *= o.to_mpq();
    shrink();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.sgn() == 0) throw std::invalid_argument("Rational: division by zero");
    if (small() && o.small()) {
        const int128 n = static_cast<int128>(num_) * o.den_;
        const int128 d = static_cast<int128>(den_) * o.num_;
        set_small_reduced(n, d);
        return *this;
    }
    promote();
    *big_ /= o.to_mpq();
    shrink();
    return *this;
}

bool operator==(const Rational& a, const Rational& b) {
    if (a.small() && b.small()) return a.num_ == b.num_ && a.den_ == b.den_;
    return a.to_mpq() == b.to_mpq();
}

bool operator<(const Rational& a, const Rational& b) {
    if (a.small() && b.small())
        return static_cast<int128>(a.num_) * b.den_ < static_cast<int128>(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
}

std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x.sgn() < 0) return std::nullopt;
    if (x.sgn() == 0) return Rational(0);
    const Integer num = x.get_num();
    const Integer den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

std::string rational_to_string(const Rational& x) { return x.get_str(); }

}  // namespace hecke
