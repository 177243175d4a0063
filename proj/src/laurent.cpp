#include "thetainv/laurent.hpp"

#include <sstream>

namespace thetainv {

LaurentPoly LaurentPoly::monomial(long exp, Scalar coeff) {
    LaurentPoly p;
    if (!coeff.is_zero()) p.terms_.emplace(exp, std::move(coeff));
    return p;
}

Scalar LaurentPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Scalar() : it->second;
}

void LaurentPoly::add_term(long exp, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Scalar& c) const {
    LaurentPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, co] : terms_) r.add_term(e, co * c);
    return r;
}

LaurentPoly LaurentPoly::substitute(long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e * k, c);
    return r;
}

LaurentPoly LaurentPoly::sesqui_adjoint() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(-e, c.conj());
    return r;
}

std::optional<long> LaurentPoly::min_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

std::optional<long> LaurentPoly::max_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.str();
        if (!first) os << (cs[0] == '-' ? " - " : " + ");
        else if (cs[0] == '-') os << "-";
        if (cs[0] == '-') cs = cs.substr(1);
        bool needs_paren = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
        if (e == 0) {
            os << (needs_paren ? "(" + cs + ")" : cs);
        } else {
            if (cs != "1") os << (needs_paren ? "(" + cs + ")" : cs) << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

TriLaurent TriLaurent::monomial(Key exps, Scalar coeff) {
    TriLaurent p;
    if (!coeff.is_zero()) p.terms_.emplace(exps, std::move(coeff));
    return p;
}

Scalar TriLaurent::coeff(const Key& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Scalar() : it->second;
}

void TriLaurent::add_term(const Key& exps, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TriLaurent TriLaurent::operator-() const {
    TriLaurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

TriLaurent& TriLaurent::operator+=(const TriLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TriLaurent& TriLaurent::operator-=(const TriLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

TriLaurent TriLaurent::operator*(const Scalar& c) const {
    TriLaurent r;
    if (c.is_zero()) return r;
    for (const auto& [e, co] : terms_) r.add_term(e, co * c);
    return r;
}

LaurentPoly TriLaurent::substitute3(long k1, long k2, long k3) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e[0] * k1 + e[1] * k2 + e[2] * k3, c);
    return r;
}

TriLaurent TriLaurent::permuted(const std::array<int, 3>& perm) const {
    TriLaurent r;
    for (const auto& [e, c] : terms_) {
        Key ne{};
        for (int i = 0; i < 3; ++i) ne[static_cast<size_t>(perm[static_cast<size_t>(i)])] = e[static_cast<size_t>(i)];
        r.add_term(ne, c);
    }
    return r;
}

TriLaurent TriLaurent::inverted() const {
    TriLaurent r;
    for (const auto& [e, c] : terms_) r.add_term({-e[0], -e[1], -e[2]}, c);
    return r;
}

std::string TriLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.str();
        if (!first) os << (cs[0] == '-' ? " - " : " + ");
        else if (cs[0] == '-') os << "-";
        if (cs[0] == '-') cs = cs.substr(1);
        bool needs_paren = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
        bool any_var = e[0] != 0 || e[1] != 0 || e[2] != 0;
        if (!any_var) {
            os << (needs_paren ? "(" + cs + ")" : cs);
        } else {
            bool coeff_shown = cs != "1";
            if (coeff_shown) os << (needs_paren ? "(" + cs + ")" : cs) << "*";
            bool firstv = true;
            for (int i = 0; i < 3; ++i) {
                if (e[static_cast<size_t>(i)] == 0) continue;
                if (!firstv) os << "*";
                os << "t" << (i + 1);
                if (e[static_cast<size_t>(i)] != 1) os << "^" << e[static_cast<size_t>(i)];
                firstv = false;
            }
        }
        first = false;
    }
    return os.str();
}

}  // namespace thetainv
