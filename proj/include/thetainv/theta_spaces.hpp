#pragma once

#include "thetainv/laurent.hpp"
#include "thetainv/sl2.hpp"

#include <array>
#include <map>

namespace thetainv {

/*
 * Linear combination of exponent triples modulo simultaneous shift, with the
 * triple entries unordered: antisymmetric (wedge) for parity 0, symmetric for
 * parity 1.  Canonical form of a stored triple: sorted ascending, minimum
 * entry zero; for parity 0 the sort's sign is folded into the coefficient and
 * triples with repeated entries vanish.
 */
class ThetaClass {
public:
    using Triple = std::array<long, 3>;

    explicit ThetaClass(int parity) : eps_(parity) {}
    /* canonicalize a raw triple and attach a coefficient */
    static ThetaClass normal_form(int parity, long p, long q, long r, const Scalar& coeff);

    int parity() const { return eps_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Triple, Scalar>& terms() const { return terms_; }

    /* merge in one canonical term (canonicalizes first) */
    void add(long p, long q, long r, const Scalar& coeff);
    ThetaClass& operator+=(const ThetaClass& o);
    friend ThetaClass operator+(ThetaClass a, const ThetaClass& b) { a += b; return a; }
    ThetaClass operator*(const Scalar& c) const;
    ThetaClass operator-() const;

    friend bool operator==(const ThetaClass& a, const ThetaClass& b) {
        return a.eps_ == b.eps_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const ThetaClass& a, const ThetaClass& b) { return !(a == b); }

    std::string str() const;

private:
    int eps_;
    std::map<Triple, Scalar> terms_;
};

ThetaClass normalize_triple(int parity, long p, long q, long r, const Scalar& coeff);

/*
 * Element of the symmetrized three-variable polynomial model: the image of a
 * class under the orbit-sum embedding.  The polynomial is invariant under
 * simultaneous inversion of all variables, and permuting variables acts by
 * the sign character for parity 0 and trivially for parity 1.
 */
class SThetaElt {
public:
    explicit SThetaElt(int parity) : eps_(parity) {}
    SThetaElt(int parity, TriLaurent image) : eps_(parity), image_(std::move(image)) {}

    int parity() const { return eps_; }
    const TriLaurent& image() const { return image_; }
    bool is_zero() const { return image_.is_zero(); }

    SThetaElt& operator+=(const SThetaElt& o);
    friend SThetaElt operator+(SThetaElt a, const SThetaElt& b) { a += b; return a; }
    SThetaElt operator*(const Scalar& c) const { return SThetaElt(eps_, image_ * c); }
    SThetaElt operator-() const { return SThetaElt(eps_, -image_); }

    friend bool operator==(const SThetaElt& a, const SThetaElt& b) {
        return a.eps_ == b.eps_ && a.image_ == b.image_;
    }
    friend bool operator!=(const SThetaElt& a, const SThetaElt& b) { return !(a == b); }

    /* check the symmetry/inversion invariants hold for the stored polynomial */
    bool well_formed() const;

private:
    int eps_;
    TriLaurent image_;
};

/*
 * Orbit-sum embedding of a class into three-variable Laurent polynomials:
 * each triple contributes its twelve signed monomials (six permutations,
 * signed for parity 0, each together with its inverted twin).  Stored
 * triples whose entry sum is divisible by three are first re-centered to the
 * unique shift representative with entry sum zero, so classes produced by the
 * difference map embed consistently regardless of canonical shift.
 */
SThetaElt embed_class(const ThetaClass& c);

/* difference-triple class of a scalar-decorated two-loop graph with edge
   exponents (a, b, c) */
ThetaClass w_scalar(int parity, long a, long b, long c);

/* two-loop graph with tensor-decorated edges carrying Laurent exponents */
struct DecoratedTheta {
    int parity = 0;
    std::array<TensorSqLaurent, 3> edges;
};

/* weight-system image of a decorated graph: sum over monomial triples of
   theta_weight times the embedded difference class */
SThetaElt w_lie(const DecoratedTheta& d);

/* the standard family: image of the (0, 1, p) scalar class for parity 0,
   written out as its twelve monomials */
TriLaurent f_poly(long p);

/* quotient by the image of the group-like part: identity for parity 0; for
   parity 1 the constant monomial is dropped */
SThetaElt coker_project(const SThetaElt& x);

}  // namespace thetainv
