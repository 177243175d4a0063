#include "thetainv/sl2.hpp"

#include <sstream>
#include <stdexcept>

namespace thetainv {

LieElt LieElt::basis(int k) {
    LieElt x;
    x.c[static_cast<size_t>(k)] = Scalar::one();
    return x;
}

bool LieElt::is_zero() const {
    return c[0].is_zero() && c[1].is_zero() && c[2].is_zero();
}

LieElt LieElt::operator-() const { return LieElt(-c[0], -c[1], -c[2]); }

LieElt& LieElt::operator+=(const LieElt& o) {
    for (int k = 0; k < 3; ++k) c[static_cast<size_t>(k)] += o.c[static_cast<size_t>(k)];
    return *this;
}

LieElt operator-(LieElt a, const LieElt& b) {
    for (int k = 0; k < 3; ++k) a.c[static_cast<size_t>(k)] -= b.c[static_cast<size_t>(k)];
    return a;
}

LieElt LieElt::operator*(const Scalar& s) const {
    return LieElt(c[0] * s, c[1] * s, c[2] * s);
}

std::string LieElt::str() const {
    static const char* names[3] = {"h", "e", "f"};
    std::string out;
    for (int k = 0; k < 3; ++k) {
        const Scalar& co = c[static_cast<size_t>(k)];
        if (co.is_zero()) continue;
        std::string cs = co.str();
        if (!out.empty() && cs[0] != '-') out += "+";
        if (cs == "1") out += names[k];
        else if (cs == "-1") out += std::string("-") + names[k];
        else out += "(" + cs + ")" + names[k];
    }
    return out.empty() ? "0" : out;
}

LieElt bracket(const LieElt& x, const LieElt& y) {
    // [h,e] = 2e, [h,f] = -2f, [e,f] = h
    Scalar ch = x.c[1] * y.c[2] - x.c[2] * y.c[1];
    Scalar ce = x.c[0] * y.c[1] - x.c[1] * y.c[0];
    ce.scale_int(2);
    Scalar cf = x.c[0] * y.c[2] - x.c[2] * y.c[0];
    cf.scale_int(-2);
    return LieElt(std::move(ch), std::move(ce), std::move(cf));
}

Scalar bform(const LieElt& x, const LieElt& y) {
    Scalar hh = x.c[0] * y.c[0];
    hh.scale_int(2);
    return hh + x.c[1] * y.c[2] + x.c[2] * y.c[1];
}

LieElt dual_elt(const LieElt& x) {
    return LieElt(x.c[0] / Scalar(2), x.c[2], x.c[1]);
}

Scalar triple_trace(const LieElt& x, const LieElt& y, const LieElt& z) {
    return bform(bracket(x, y), z);
}

TensorSq TensorSq::basis(int i, int j) {
    TensorSq t;
    t.at(i, j) = Scalar::one();
    return t;
}

bool TensorSq::is_zero() const {
    for (const auto& s : m_)
        if (!s.is_zero()) return false;
    return true;
}

TensorSq TensorSq::operator-() const {
    TensorSq r;
    for (size_t k = 0; k < 9; ++k) r.m_[k] = -m_[k];
    return r;
}

TensorSq& TensorSq::operator+=(const TensorSq& o) {
    for (size_t k = 0; k < 9; ++k) m_[k] += o.m_[k];
    return *this;
}

TensorSq& TensorSq::operator-=(const TensorSq& o) {
    for (size_t k = 0; k < 9; ++k) m_[k] -= o.m_[k];
    return *this;
}

TensorSq TensorSq::operator*(const Scalar& s) const {
    TensorSq r;
    for (size_t k = 0; k < 9; ++k) r.m_[k] = m_[k] * s;
    return r;
}

TensorSq TensorSq::conj() const {
    TensorSq r;
    for (size_t k = 0; k < 9; ++k) r.m_[k] = m_[k].conj();
    return r;
}

std::string TensorSq::str() const {
    static const char* names[3] = {"h", "e", "f"};
    std::string out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const Scalar& co = at(i, j);
            if (co.is_zero()) continue;
            std::string cs = co.str();
            if (!out.empty() && cs[0] != '-') out += " + ";
            else if (!out.empty()) { out += " - "; cs = cs.substr(1); }
            if (cs != "1") out += "(" + cs + ")";
            out += std::string(names[i]) + "⊗" + names[j];
        }
    return out.empty() ? "0" : out;
}

namespace {
/* Gram matrix of B over (h,e,f): diag-block [[2,0,0],[0,0,1],[0,1,0]] */
constexpr int kGram[3][3] = {{2, 0, 0}, {0, 0, 1}, {0, 1, 0}};
/* its inverse: [[1/2,0,0],[0,0,1],[0,1,0]]; store twice-inverse as ints */
}  // namespace

TensorSq tsq_mul(const TensorSq& a, const TensorSq& b) {
    // (a . b)_{il} = sum_{jk} a_{ij} G_{jk} b_{kl}
    TensorSq r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const Scalar& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (int k = 0; k < 3; ++k) {
                int g = kGram[j][k];
                if (g == 0) continue;
                for (int l = 0; l < 3; ++l) {
                    const Scalar& bkl = b.at(k, l);
                    if (bkl.is_zero()) continue;
                    Scalar term = aij * bkl;
                    if (g != 1) term.scale_int(g);
                    r.at(i, l) += term;
                }
            }
        }
    return r;
}

TensorSq tsq_swap(const TensorSq& a) {
    TensorSq r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(j, i) = a.at(i, j);
    return r;
}

TensorSq casimir() {
    TensorSq c;
    c.at(0, 0) = Scalar::fraction(1, 2);
    c.at(1, 2) = Scalar::one();
    c.at(2, 1) = Scalar::one();
    return c;
}

Scalar endo_trace(const TensorSq& a) {
    // tr(a G): 2 a_hh + a_ef + a_fe
    Scalar t = a.at(0, 0);
    t.scale_int(2);
    return t + a.at(1, 2) + a.at(2, 1);
}

ExactMatrix tensor_to_endo(const TensorSq& a) {
    // M = T G
    ExactMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Scalar acc;
            for (int k = 0; k < 3; ++k) {
                int g = kGram[k][j];
                if (g == 0) continue;
                Scalar term = a.at(i, k);
                term.scale_int(g);
                acc += term;
            }
            m.at(i, j) = std::move(acc);
        }
    return m;
}

TensorSq endo_to_tensor(const ExactMatrix& m) {
    if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("endomorphism must be 3x3");
    // T = M G^{-1}; G^{-1} columns: (1/2,0,0), (0,0,1), (0,1,0)
    TensorSq t;
    Scalar half = Scalar::fraction(1, 2);
    for (int i = 0; i < 3; ++i) {
        t.at(i, 0) = m.at(i, 0) * half;
        t.at(i, 1) = m.at(i, 2);
        t.at(i, 2) = m.at(i, 1);
    }
    return t;
}

SU2Matrix::SU2Matrix() : e_{Scalar::one(), Scalar(), Scalar(), Scalar::one()} {}

SU2Matrix::SU2Matrix(Scalar a, Scalar b, Scalar c, Scalar d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    validate();
}

SU2Matrix::SU2Matrix(const ExactMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("expected a 2x2 matrix");
    e_ = {m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1)};
    validate();
}

void SU2Matrix::validate() const {
    Scalar det = e_[0] * e_[3] - e_[1] * e_[2];
    if (det != Scalar::one()) throw std::invalid_argument("matrix does not have determinant 1");
    // unitarity: rows orthonormal under the hermitian form
    Scalar n0 = e_[0] * e_[0].conj() + e_[1] * e_[1].conj();
    Scalar n1 = e_[2] * e_[2].conj() + e_[3] * e_[3].conj();
    Scalar x = e_[0] * e_[2].conj() + e_[1] * e_[3].conj();
    if (n0 != Scalar::one() || n1 != Scalar::one() || !x.is_zero())
        throw std::invalid_argument("matrix is not unitary");
}

SU2Matrix operator*(const SU2Matrix& x, const SU2Matrix& y) {
    SU2Matrix r;
    r.e_[0] = x.e_[0] * y.e_[0] + x.e_[1] * y.e_[2];
    r.e_[1] = x.e_[0] * y.e_[1] + x.e_[1] * y.e_[3];
    r.e_[2] = x.e_[2] * y.e_[0] + x.e_[3] * y.e_[2];
    r.e_[3] = x.e_[2] * y.e_[1] + x.e_[3] * y.e_[3];
    return r;
}

SU2Matrix SU2Matrix::inverse() const {
    SU2Matrix r;
    r.e_[0] = e_[0].conj();
    r.e_[1] = e_[2].conj();
    r.e_[2] = e_[1].conj();
    r.e_[3] = e_[3].conj();
    return r;
}

SU2Matrix SU2Matrix::operator-() const {
    SU2Matrix r;
    for (size_t k = 0; k < 4; ++k) r.e_[k] = -e_[k];
    return r;
}

ExactMatrix SU2Matrix::to_matrix() const {
    ExactMatrix m(2, 2);
    m.at(0, 0) = e_[0];
    m.at(0, 1) = e_[1];
    m.at(1, 0) = e_[2];
    m.at(1, 1) = e_[3];
    return m;
}

int SU2Matrix::cmp(const SU2Matrix& o) const {
    for (size_t k = 0; k < 4; ++k) {
        int c = e_[k].cmp(o.e_[k]);
        if (c != 0) return c;
    }
    return 0;
}

std::string SU2Matrix::str() const {
    std::ostringstream os;
    os << "[[" << e_[0].str() << ", " << e_[1].str() << "], [" << e_[2].str() << ", "
       << e_[3].str() << "]]";
    return os.str();
}

ExactMatrix ad_matrix(const SU2Matrix& g) {
    // columns: coordinates of g b_j g^{-1} over (h,e,f)
    SU2Matrix gi = g.inverse();
    ExactMatrix m(3, 3);
    // basis as 2x2: h = [[1,0],[0,-1]], e = [[0,1],[0,0]], f = [[0,0],[1,0]]
    const Scalar& a = g.a();
    const Scalar& b = g.b();
    const Scalar& c = g.c();
    const Scalar& d = g.d();
    // g h g^{-1}
    {
        // g * h = [[a,-b],[c,-d]]; then * g^{-1}
        Scalar m00 = a * gi.a() - b * gi.c();
        Scalar m01 = a * gi.b() - b * gi.d();
        Scalar m10 = c * gi.a() - d * gi.c();
        m.at(0, 0) = std::move(m00);
        m.at(1, 0) = std::move(m01);
        m.at(2, 0) = std::move(m10);
    }
    // g e g^{-1}: g * e = [[0,a],[0,c]]
    {
        Scalar m00 = a * gi.c();
        Scalar m01 = a * gi.d();
        Scalar m10 = c * gi.c();
        m.at(0, 1) = std::move(m00);
        m.at(1, 1) = std::move(m01);
        m.at(2, 1) = std::move(m10);
    }
    // g f g^{-1}: g * f = [[b,0],[d,0]]
    {
        Scalar m00 = b * gi.a();
        Scalar m01 = b * gi.b();
        Scalar m10 = d * gi.a();
        m.at(0, 2) = std::move(m00);
        m.at(1, 2) = std::move(m01);
        m.at(2, 2) = std::move(m10);
    }
    return m;
}

TensorSq ad_of(const SU2Matrix& g) {
    return endo_to_tensor(ad_matrix(g));
}

namespace {
/* the structure 3-form on basis indices: value at the six permutations of
   (h,e,f), 2 * sign; zero otherwise */
struct TripleEntry { int i, j, k, sign; };
constexpr TripleEntry kTriple[6] = {
    {0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1},
    {0, 2, 1, -1}, {2, 1, 0, -1}, {1, 0, 2, -1},
};
}  // namespace

Scalar theta_weight(const TensorSq& P, const TensorSq& Q, const TensorSq& R) {
    Scalar acc;
    for (const auto& t1 : kTriple) {
        // first vertex routes (i,k,m) = first factors of P,Q,R
        for (const auto& t2 : kTriple) {
            // second vertex routes (n,l,j) = second factors of R,Q,P
            const Scalar& p = P.at(t1.i, t2.k);
            if (p.is_zero()) continue;
            const Scalar& q = Q.at(t1.j, t2.j);
            if (q.is_zero()) continue;
            const Scalar& r = R.at(t1.k, t2.i);
            if (r.is_zero()) continue;
            Scalar term = p * q * r;
            term.scale_int(4 * t1.sign * t2.sign);
            acc += term;
        }
    }
    return acc;
}

TensorSqLaurent TensorSqLaurent::monomial(long exp, TensorSq coeff) {
    TensorSqLaurent r;
    if (!coeff.is_zero()) r.terms_.emplace(exp, std::move(coeff));
    return r;
}

void TensorSqLaurent::add_term(long exp, const TensorSq& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorSqLaurent& TensorSqLaurent::operator+=(const TensorSqLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Scalar tr_pair(const TensorSq& u, const TensorSq& v) {
    // bilinear: sum u_{ij} v_{kl} G_{ik} G_{jl}
    Scalar acc;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const Scalar& uij = u.at(i, j);
            if (uij.is_zero()) continue;
            for (int k = 0; k < 3; ++k) {
                int g1 = kGram[i][k];
                if (g1 == 0) continue;
                for (int l = 0; l < 3; ++l) {
                    int g2 = kGram[j][l];
                    if (g2 == 0) continue;
                    const Scalar& vkl = v.at(k, l);
                    if (vkl.is_zero()) continue;
                    Scalar term = uij * vkl;
                    term.scale_int(g1 * g2);
                    acc += term;
                }
            }
        }
    return acc;
}

LaurentPoly tr_pair(const LaurentPoly& u, const LaurentPoly& v) {
    LaurentPoly r;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) r.add_term(a - b, ca * cb.conj());
    return r;
}

namespace {
/* sesquilinear pairing on tensor squares: hermitian extension of the compact
   form's adjoint; diagonal matrix diag(2,1,1) on (h,e,f) in each slot */
Scalar herm_pair(const TensorSq& u, const TensorSq& v) {
    constexpr int diag[3] = {2, 1, 1};
    Scalar acc;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const Scalar& uij = u.at(i, j);
            if (uij.is_zero()) continue;
            const Scalar& vij = v.at(i, j);
            if (vij.is_zero()) continue;
            Scalar term = uij * vij.conj();
            term.scale_int(diag[i] * diag[j]);
            acc += term;
        }
    return acc;
}
}  // namespace

LaurentPoly tr_pair(const TensorSqLaurent& u, const TensorSqLaurent& v) {
    LaurentPoly r;
    for (const auto& [a, ua] : u.terms())
        for (const auto& [b, vb] : v.terms()) r.add_term(a - b, herm_pair(ua, vb));
    return r;
}

Scalar bracket_relation_coeff() {
    // matrix of b: 3 x 9, columns indexed by basis pairs (i,j) -> 3i+j
    auto pair_index = [](int i, int j) { return 3 * i + j; };
    std::array<LieElt, 9> bcol;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            bcol[static_cast<size_t>(pair_index(i, j))] = bracket(LieElt::basis(i), LieElt::basis(j));

    // b* z for z = [b_i, b_j]: coefficients c_{kl} with
    // <b* z, b_k (x) b_l> = B(z, [b_k, b_l]), where the pairing on tensor
    // squares is the closure form <a(x)b, c(x)d> = B(a,d) B(b,c) (legs glued
    // the way the two-loop weight glues its second vertex)
    auto ginv_apply_left = [](const ExactMatrix& m) {
        // G^{-1} rows: (1/2,0,0), (0,0,1), (0,1,0)
        ExactMatrix r(3, 3);
        Scalar half = Scalar::fraction(1, 2);
        for (int col = 0; col < 3; ++col) {
            r.at(0, col) = m.at(0, col) * half;
            r.at(1, col) = m.at(2, col);
            r.at(2, col) = m.at(1, col);
        }
        return r;
    };
    ExactMatrix comp(9, 9);  // matrix of b* b
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const LieElt& z = bcol[static_cast<size_t>(pair_index(i, j))];
            // d_{kl} = B(z, [b_k, b_l]); then c = G^{-1} d^T G^{-1}
            ExactMatrix d(3, 3);
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    d.at(k, l) = bform(z, bcol[static_cast<size_t>(pair_index(k, l))]);
            ExactMatrix c =
                ginv_apply_left(ginv_apply_left(d.transpose()).transpose()).transpose();
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    comp.at(pair_index(k, l), pair_index(i, j)) = c.at(k, l);
        }

    // target pattern: id - swap on the pair basis
    ExactMatrix pattern(9, 9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            pattern.at(pair_index(i, j), pair_index(i, j)) += Scalar::one();
            pattern.at(pair_index(j, i), pair_index(i, j)) -= Scalar::one();
        }

    Scalar kappa;
    bool found = false;
    for (int r = 0; r < 9 && !found; ++r)
        for (int c = 0; c < 9 && !found; ++c)
            if (!pattern.at(r, c).is_zero()) {
                kappa = comp.at(r, c) / pattern.at(r, c);
                found = true;
            }
    if (!found) throw std::logic_error("degenerate pattern");
    if (comp != pattern * kappa)
        throw std::logic_error("bracket relation does not hold with a single coefficient");
    return kappa;
}

}  // namespace thetainv
