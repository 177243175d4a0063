#pragma once

#include "thetainv/rational.hpp"

#include <array>
#include <iosfwd>
#include <stdexcept>

namespace thetainv {

struct division_by_zero : std::domain_error {
    division_by_zero() : std::domain_error("scalar division by zero") {}
};

/*
 * Element of the degree-4 number field Q(i, sqrt5), stored as exact rational
 * coordinates over the fixed basis {1, i, sqrt5, i*sqrt5}.  All arithmetic is
 * exact; equality is coordinate-wise.
 */
class Scalar {
public:
    Scalar() = default;  // zero
    explicit Scalar(long n) { c_[0] = n; }
    explicit Scalar(const Rational& r) { c_[0] = r; }
    Scalar(Rational re, Rational im, Rational rt5, Rational im_rt5)
        : c_{std::move(re), std::move(im), std::move(rt5), std::move(im_rt5)} {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar unit_i() { return Scalar(Rational(0), Rational(1), Rational(0), Rational(0)); }
    static Scalar sqrt5() { return Scalar(Rational(0), Rational(0), Rational(1), Rational(0)); }
    static Scalar fraction(long num, long den);

    /* coordinate in the basis order {1, i, sqrt5, i*sqrt5} */
    const Rational& coord(int k) const { return c_[static_cast<size_t>(k)]; }

    bool is_zero() const;
    bool is_rational() const;  // lies in Q
    bool is_real() const;      // lies in Q(sqrt5)

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
    friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    /* ring automorphism fixing sqrt5, i -> -i */
    Scalar conj() const;
    /* ring automorphism fixing i, sqrt5 -> -sqrt5 */
    Scalar galois_sqrt5() const;
    /* throws division_by_zero when *this == 0 */
    Scalar inverse() const;

    void scale_int(long k);

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    /* total order (coordinate-lexicographic), for use as container key */
    int cmp(const Scalar& o) const;
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.cmp(b) < 0; }

    /* symbolic rendering, e.g. "-3+√5" or "(1/2)i√5" */
    std::string str() const;

private:
    std::array<Rational, 4> c_{};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace thetainv
