#include "thetainv/scalar.hpp"

#include <ostream>
#include <sstream>

namespace thetainv {

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q) << '/' << denominator(q);
    return os.str();
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(std::string("bad rational literal '") + s + "': " + e.what());
    }
}

Scalar Scalar::fraction(long num, long den) {
    if (den == 0) throw division_by_zero();
    return Scalar(Rational(num, den));
}

bool Scalar::is_zero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool Scalar::is_rational() const {
    return c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool Scalar::is_real() const {
    return c_[1] == 0 && c_[3] == 0;
}

Scalar Scalar::operator-() const {
    Scalar r;
    for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
}

namespace {
/* basis multiplication: u_a * u_b = coeff * u_index over {1, i, sqrt5, i sqrt5} */
struct BasisProd { int index; int coeff; };
constexpr BasisProd kBasisMul[4][4] = {
    {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
    {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
    {{2, 1}, {3, 1}, {0, 5}, {1, 5}},
    {{3, 1}, {2, -1}, {1, 5}, {0, -5}},
};
}  // namespace

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    for (int p = 0; p < 4; ++p) {
        if (a.c_[p] == 0) continue;
        for (int q = 0; q < 4; ++q) {
            if (b.c_[q] == 0) continue;
            const BasisProd& bp = kBasisMul[p][q];
            Rational term = a.c_[p] * b.c_[q];
            if (bp.coeff != 1) term *= bp.coeff;
            r.c_[bp.index] += term;
        }
    }
    return r;
}

Scalar Scalar::conj() const {
    Scalar r(*this);
    r.c_[1] = -r.c_[1];
    r.c_[3] = -r.c_[3];
    return r;
}

Scalar Scalar::galois_sqrt5() const {
    Scalar r(*this);
    r.c_[2] = -r.c_[2];
    r.c_[3] = -r.c_[3];
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw division_by_zero();
    // x * conj(x) lies in Q(sqrt5); multiplying by its sqrt5-conjugate lands in Q
    Scalar cj = conj();
    Scalar y = *this * cj;             // coords (p, 0, q, 0)
    Rational p = y.c_[0], q = y.c_[2];
    Rational norm = p * p - 5 * q * q;  // field norm of y down to Q
    Scalar res = cj * y.galois_sqrt5();
    for (int k = 0; k < 4; ++k) res.c_[k] /= norm;
    return res;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
}

void Scalar::scale_int(long k) {
    for (auto& co : c_)
        if (co != 0) co *= k;
}

int Scalar::cmp(const Scalar& o) const {
    for (int k = 0; k < 4; ++k) {
        int c = rational_cmp(c_[k], o.c_[k]);
        if (c != 0) return c;
    }
    return 0;
}

namespace {
void append_term(std::string& out, const Rational& q, const char* sym) {
    if (q == 0) return;
    bool neg = q < 0;
    Rational a = neg ? Rational(-q) : q;
    std::string mag;
    bool unit_coeff = (a == 1) && sym[0] != '\0';
    if (!unit_coeff) {
        std::ostringstream os;
        if (denominator(a) == 1) {
            os << numerator(a);
            mag = os.str();
        } else {
            os << '(' << numerator(a) << '/' << denominator(a) << ')';
            mag = os.str();
        }
    }
    if (out.empty()) {
        if (neg) out += '-';
    } else {
        out += neg ? '-' : '+';
    }
    out += mag;
    out += sym;
}
}  // namespace

std::string Scalar::str() const {
    std::string out;
    append_term(out, c_[0], "");
    append_term(out, c_[1], "i");
    append_term(out, c_[2], "√5");
    append_term(out, c_[3], "i√5");
    if (out.empty()) out = "0";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
}

}  // namespace thetainv
