#pragma once

#include "thetainv/scalar.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace thetainv {

/*
 * Sparse Laurent polynomial in one variable t over Scalar.  Canonical form:
 * zero coefficients are never stored, so structural equality is semantic
 * equality.
 */
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(long exp, Scalar coeff);
    static LaurentPoly constant(Scalar coeff) { return monomial(0, std::move(coeff)); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, Scalar>& terms() const { return terms_; }
    Scalar coeff(long exp) const;
    void add_term(long exp, const Scalar& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator*(const Scalar& c) const;

    /* t -> t^k; k = 0 collapses everything onto the constant term */
    LaurentPoly substitute(long k) const;
    /* coefficient conjugation together with t -> t^{-1} */
    LaurentPoly sesqui_adjoint() const;

    std::optional<long> min_degree() const;
    std::optional<long> max_degree() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::string str(const std::string& var = "t") const;

private:
    std::map<long, Scalar> terms_;
};

/*
 * Sparse Laurent polynomial in three variables t1, t2, t3.  Same canonical
 * form discipline as LaurentPoly.
 */
class TriLaurent {
public:
    using Key = std::array<long, 3>;

    TriLaurent() = default;
    static TriLaurent monomial(Key exps, Scalar coeff);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    Scalar coeff(const Key& exps) const;
    void add_term(const Key& exps, const Scalar& c);

    TriLaurent operator-() const;
    TriLaurent& operator+=(const TriLaurent& o);
    TriLaurent& operator-=(const TriLaurent& o);
    friend TriLaurent operator+(TriLaurent a, const TriLaurent& b) { a += b; return a; }
    friend TriLaurent operator-(TriLaurent a, const TriLaurent& b) { a -= b; return a; }
    TriLaurent operator*(const Scalar& c) const;

    /* collapse to one variable: ti -> x^{ki} */
    LaurentPoly substitute3(long k1, long k2, long k3) const;
    /* relabel variables: new exponent vector e' with e'[perm[i]] = e[i] */
    TriLaurent permuted(const std::array<int, 3>& perm) const;
    /* all ti -> ti^{-1} */
    TriLaurent inverted() const;

    friend bool operator==(const TriLaurent& a, const TriLaurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TriLaurent& a, const TriLaurent& b) { return !(a == b); }

    std::string str() const;

private:
    std::map<Key, Scalar> terms_;
};

}  // namespace thetainv
