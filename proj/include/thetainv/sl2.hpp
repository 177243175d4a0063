#pragma once

#include "thetainv/exact_matrix.hpp"
#include "thetainv/laurent.hpp"
#include "thetainv/scalar.hpp"

#include <array>
#include <map>

namespace thetainv {

/*
 * The rank-1 simple Lie algebra with ordered basis (h, e, f):
 *   [h,e] = 2e, [h,f] = -2f, [e,f] = h,
 * and the invariant form B(X,Y) = Tr(XY) taken in the defining 2x2
 * representation, so B(h,h) = 2, B(e,f) = 1, all other basis pairs 0.
 */
struct LieElt {
    std::array<Scalar, 3> c{};  // coordinates over (h, e, f)

    LieElt() = default;
    LieElt(Scalar ch, Scalar ce, Scalar cf) : c{std::move(ch), std::move(ce), std::move(cf)} {}
    static LieElt h() { return LieElt(Scalar::one(), Scalar(), Scalar()); }
    static LieElt e() { return LieElt(Scalar(), Scalar::one(), Scalar()); }
    static LieElt f() { return LieElt(Scalar(), Scalar(), Scalar::one()); }
    static LieElt basis(int k);

    bool is_zero() const;
    LieElt operator-() const;
    LieElt& operator+=(const LieElt& o);
    friend LieElt operator+(LieElt a, const LieElt& b) { a += b; return a; }
    friend LieElt operator-(LieElt a, const LieElt& b);
    LieElt operator*(const Scalar& s) const;
    friend bool operator==(const LieElt& a, const LieElt& b) { return a.c == b.c; }

    std::string str() const;
};

LieElt bracket(const LieElt& x, const LieElt& y);
Scalar bform(const LieElt& x, const LieElt& y);
/* the element dual to x in the sense B(y, dual_elt(x)) = coordinate pairing;
   on the basis this is the B-dual basis: h/2, f, e */
LieElt dual_elt(const LieElt& x);
/* fully antisymmetric structure form B([X,Y], Z) */
Scalar triple_trace(const LieElt& x, const LieElt& y, const LieElt& z);

/*
 * Element of the tensor square of the Lie algebra, as a 3x3 coefficient grid
 * over the basis (h,e,f) x (h,e,f); entry (i,j) multiplies b_i (x) b_j.
 * Carries the associative product (X1 (x) Y1)(X2 (x) Y2) = B(Y1,X2) X1 (x) Y2,
 * for which the canonical invariant element is the unit.
 */
class TensorSq {
public:
    TensorSq() = default;
    static TensorSq basis(int i, int j);

    Scalar& at(int i, int j) { return m_[static_cast<size_t>(3 * i + j)]; }
    const Scalar& at(int i, int j) const { return m_[static_cast<size_t>(3 * i + j)]; }

    bool is_zero() const;
    TensorSq operator-() const;
    TensorSq& operator+=(const TensorSq& o);
    TensorSq& operator-=(const TensorSq& o);
    friend TensorSq operator+(TensorSq a, const TensorSq& b) { a += b; return a; }
    friend TensorSq operator-(TensorSq a, const TensorSq& b) { a -= b; return a; }
    TensorSq operator*(const Scalar& s) const;
    friend bool operator==(const TensorSq& a, const TensorSq& b) { return a.m_ == b.m_; }
    friend bool operator!=(const TensorSq& a, const TensorSq& b) { return !(a == b); }

    TensorSq conj() const;  // entrywise i -> -i
    std::string str() const;

private:
    std::array<Scalar, 9> m_{};
};

/* product in the tensor-square algebra */
TensorSq tsq_mul(const TensorSq& a, const TensorSq& b);
/* swap of the two tensor factors */
TensorSq tsq_swap(const TensorSq& a);
/* unit of the algebra: h(x)h/2 + e(x)f + f(x)e */
TensorSq casimir();
/* trace of the endomorphism corresponding to the tensor under u(x)v -> B(v,.)u */
Scalar endo_trace(const TensorSq& a);
/* the 3x3 matrix of that endomorphism, columns = images of (h,e,f) */
ExactMatrix tensor_to_endo(const TensorSq& a);
TensorSq endo_to_tensor(const ExactMatrix& m);

/*
 * Special unitary 2x2 matrix over Scalar, row-major entries (a,b,c,d).
 * Construction enforces det = 1 and unitarity exactly.
 */
class SU2Matrix {
public:
    SU2Matrix();  // identity
    SU2Matrix(Scalar a, Scalar b, Scalar c, Scalar d);
    explicit SU2Matrix(const ExactMatrix& m);

    static SU2Matrix identity() { return SU2Matrix(); }

    const Scalar& a() const { return e_[0]; }
    const Scalar& b() const { return e_[1]; }
    const Scalar& c() const { return e_[2]; }
    const Scalar& d() const { return e_[3]; }
    const Scalar& entry(int i, int j) const { return e_[static_cast<size_t>(2 * i + j)]; }

    friend SU2Matrix operator*(const SU2Matrix& x, const SU2Matrix& y);
    SU2Matrix inverse() const;  // conjugate transpose
    SU2Matrix operator-() const;
    Scalar trace() const { return e_[0] + e_[3]; }
    ExactMatrix to_matrix() const;

    friend bool operator==(const SU2Matrix& a, const SU2Matrix& b) { return a.e_ == b.e_; }
    friend bool operator!=(const SU2Matrix& a, const SU2Matrix& b) { return !(a == b); }
    int cmp(const SU2Matrix& o) const;
    friend bool operator<(const SU2Matrix& a, const SU2Matrix& b) { return a.cmp(b) < 0; }

    std::string str() const;

private:
    std::array<Scalar, 4> e_;
    void validate() const;
};

/* 3x3 matrix of conjugation by g on the Lie algebra, basis (h,e,f) */
ExactMatrix ad_matrix(const SU2Matrix& g);
/* the same operator as a tensor-square element (endomorphism picture) */
TensorSq ad_of(const SU2Matrix& g);

/*
 * Weight of the two-loop graph whose three edges are decorated by tensors
 * P, Q, R: route the first tensor factors through one vertex and the second
 * factors (in reversed order) through the other, contracting each vertex with
 * the antisymmetric structure form.
 */
Scalar theta_weight(const TensorSq& P, const TensorSq& Q, const TensorSq& R);

/* Tensor-square element with Laurent decoration: finitely many exponents,
   each carrying a TensorSq coefficient. */
class TensorSqLaurent {
public:
    TensorSqLaurent() = default;
    static TensorSqLaurent monomial(long exp, TensorSq coeff);

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, TensorSq>& terms() const { return terms_; }
    void add_term(long exp, const TensorSq& c);
    TensorSqLaurent& operator+=(const TensorSqLaurent& o);
    friend bool operator==(const TensorSqLaurent& a, const TensorSqLaurent& b) { return a.terms_ == b.terms_; }

private:
    std::map<long, TensorSq> terms_;
};

/*
 * Edge pairings.  The finite-dimensional case is bilinear: the involution on
 * the algebra is the linear extension of the compact real form's adjoint, and
 * the two sign factors cancel into the product of invariant forms.  The
 * Laurent cases are sesquilinear: coefficients of the second argument are
 * conjugated and its t-exponent enters with opposite sign.
 */
Scalar tr_pair(const TensorSq& u, const TensorSq& v);
LaurentPoly tr_pair(const LaurentPoly& u, const LaurentPoly& v);
LaurentPoly tr_pair(const TensorSqLaurent& u, const TensorSqLaurent& v);

/*
 * The bracket map b: tensor square -> algebra and its B-adjoint b* satisfy
 * b* b = kappa (id - swap); returns kappa after verifying the identity on the
 * full 9-dimensional space.  Throws std::logic_error if no such kappa exists.
 */
Scalar bracket_relation_coeff();

}  // namespace thetainv
