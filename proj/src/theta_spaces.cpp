#include "thetainv/theta_spaces.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace thetainv {

namespace {
constexpr std::array<std::array<int, 3>, 6> kPerms = {{
    {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2},
}};
constexpr std::array<int, 6> kPermSign = {1, 1, 1, -1, -1, -1};
}  // namespace

ThetaClass ThetaClass::normal_form(int parity, long p, long q, long r, const Scalar& coeff) {
    ThetaClass c(parity);
    c.add(p, q, r, coeff);
    return c;
}

void ThetaClass::add(long p, long q, long r, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    std::array<long, 3> t{p, q, r};
    int sign = 1;
    // three-element sort, tracking transpositions
    if (t[0] > t[1]) { std::swap(t[0], t[1]); sign = -sign; }
    if (t[1] > t[2]) { std::swap(t[1], t[2]); sign = -sign; }
    if (t[0] > t[1]) { std::swap(t[0], t[1]); sign = -sign; }
    if (eps_ == 0 && (t[0] == t[1] || t[1] == t[2])) return;
    long m = t[0];
    t = {0, t[1] - m, t[2] - m};
    Scalar c = coeff;
    if (eps_ == 0 && sign < 0) c = -c;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ThetaClass& ThetaClass::operator+=(const ThetaClass& o) {
    if (eps_ != o.eps_) throw std::invalid_argument("parity mismatch");
    for (const auto& [t, c] : o.terms_) add(t[0], t[1], t[2], c);
    return *this;
}

ThetaClass ThetaClass::operator*(const Scalar& c) const {
    ThetaClass r(eps_);
    if (c.is_zero()) return r;
    for (const auto& [t, co] : terms_) r.terms_.emplace(t, co * c);
    return r;
}

ThetaClass ThetaClass::operator-() const {
    ThetaClass r(eps_);
    for (const auto& [t, co] : terms_) r.terms_.emplace(t, -co);
    return r;
}

std::string ThetaClass::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    const char* op = eps_ == 0 ? "∧" : "·";
    for (const auto& [t, c] : terms_) {
        std::string cs = c.str();
        if (!first) os << (cs[0] == '-' ? " - " : " + ");
        else if (cs[0] == '-') os << "-";
        if (cs[0] == '-') cs = cs.substr(1);
        if (cs != "1") os << "(" << cs << ")";
        os << "[t^" << t[0] << op << "t^" << t[1] << op << "t^" << t[2] << "]";
        first = false;
    }
    return os.str();
}

ThetaClass normalize_triple(int parity, long p, long q, long r, const Scalar& coeff) {
    return ThetaClass::normal_form(parity, p, q, r, coeff);
}

SThetaElt& SThetaElt::operator+=(const SThetaElt& o) {
    if (eps_ != o.eps_) throw std::invalid_argument("parity mismatch");
    image_ += o.image_;
    return *this;
}

bool SThetaElt::well_formed() const {
    if (image_.inverted() != image_) return false;
    for (size_t s = 0; s < kPerms.size(); ++s) {
        std::array<int, 3> perm = kPerms[s];
        TriLaurent p = image_.permuted(perm);
        if (eps_ == 0 && kPermSign[s] < 0) p = -p;
        if (p != image_) return false;
    }
    return true;
}

SThetaElt embed_class(const ThetaClass& c) {
    TriLaurent out;
    for (const auto& [t, coeff] : c.terms()) {
        std::array<long, 3> rep = t;
        long s = t[0] + t[1] + t[2];
        if (s % 3 == 0) {
            long m = s / 3;
            rep = {t[0] - m, t[1] - m, t[2] - m};
        }
        for (size_t k = 0; k < kPerms.size(); ++k) {
            Scalar term = coeff;
            if (c.parity() == 0 && kPermSign[k] < 0) term = -term;
            TriLaurent::Key e{};
            for (int i = 0; i < 3; ++i)
                e[static_cast<size_t>(kPerms[k][static_cast<size_t>(i)])] = rep[static_cast<size_t>(i)];
            out.add_term(e, term);
            out.add_term({-e[0], -e[1], -e[2]}, term);
        }
    }
    return SThetaElt(c.parity(), std::move(out));
}

ThetaClass w_scalar(int parity, long a, long b, long c) {
    return normalize_triple(parity, b - a, a - c, c - b, Scalar::one());
}

SThetaElt w_lie(const DecoratedTheta& d) {
    SThetaElt out(d.parity);
    for (const auto& [a, p] : d.edges[0].terms())
        for (const auto& [b, q] : d.edges[1].terms())
            for (const auto& [c, r] : d.edges[2].terms()) {
                Scalar wt = theta_weight(p, q, r);
                if (wt.is_zero()) continue;
                out += embed_class(w_scalar(d.parity, a, b, c)) * wt;
            }
    return out;
}

TriLaurent f_poly(long p) {
    struct Row { int sign; long e1, e2, e3; };
    const Row rows[12] = {
        {+1, 1, -p, p - 1},  {-1, 1, p - 1, -p},  {-1, -p, 1, p - 1},
        {+1, p - 1, 1, -p},  {+1, -p, p - 1, 1},  {-1, p - 1, -p, 1},
        {+1, -1, p, -p + 1}, {-1, -1, -p + 1, p}, {-1, p, -1, -p + 1},
        {+1, -p + 1, -1, p}, {+1, p, -p + 1, -1}, {-1, -p + 1, p, -1},
    };
    TriLaurent out;
    for (const auto& r : rows)
        out.add_term({r.e1, r.e2, r.e3}, Scalar(r.sign));
    return out;
}

SThetaElt coker_project(const SThetaElt& x) {
    if (x.parity() == 0) return x;
    TriLaurent img = x.image();
    Scalar c0 = img.coeff({0, 0, 0});
    if (!c0.is_zero()) img.add_term({0, 0, 0}, -c0);
    return SThetaElt(x.parity(), std::move(img));
}

}  // namespace thetainv
