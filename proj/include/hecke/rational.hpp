#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace hecke {

using Integer = mpz_class;

// Arbitrary-precision rational numbers. All arithmetic in the library is
// exact; no floating point appears anywhere. Values that fit in 64 bits are
// kept inline (the overwhelmingly common case here: signs and small
// integers); anything larger transparently promotes to a GMP rational, and
// results shrink back when they fit again.
class Rational {
public:
    Rational() = default;
    Rational(int n) : num_(n) {}                // NOLINT(google-explicit-constructor)
    Rational(long n) : num_(n) {}               // NOLINT(google-explicit-constructor)
    Rational(long long n) : num_(n) {}          // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d);
    Rational(const Integer& n, const Integer& d);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& o);
    Rational(Rational&& o) noexcept = default;
    Rational& operator=(const Rational& o);
    Rational& operator=(Rational&& o) noexcept = default;

    int sgn() const;
    // The numerator and denominator in lowest terms, denominator positive.
    Integer get_num() const;
    Integer get_den() const;
    mpq_class to_mpq() const;
    std::string get_str() const;
    // Kept for call-site compatibility with mpq_class; values are always
    // canonical.
    void canonicalize() {}

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r = a;
        r += b;
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r = a;
        r -= b;
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r = a;
        r *= b;
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        Rational r = a;
        r /= b;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend int sgn(const Rational& x) { return x.sgn(); }

private:
    bool small() const { return big_ == nullptr; }
    void promote();
    void shrink();
    void set_small_reduced(__int128 n, __int128 d);

    // Small path: num_/den_ in lowest terms, den_ > 0. Big path: big_ set,
    // num_/den_ unused.
    long long num_ = 0;
    long long den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

inline Rational rational_from_string(const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    return Rational(q);
}

// Exact square root: returns the nonnegative root if x is a perfect square
// of a rational, nothing otherwise.
std::optional<Rational> rational_sqrt(const Rational& x);

// Renders "p" or "p/q" with q > 0.
std::string rational_to_string(const Rational& x);

}  // namespace hecke
