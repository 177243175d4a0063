#include "thetainv/group_rep.hpp"

#include <deque>
#include <set>
#include <sstream>

namespace thetainv {

Word Word::letter(int gen, int sign) {
    Word w;
    w.letters_.emplace_back(gen, sign);
    return w;
}

void Word::append(int gen, int sign) {
    if (!letters_.empty() && letters_.back().first == gen && letters_.back().second == -sign)
        letters_.pop_back();
    else
        letters_.emplace_back(gen, sign);
}

Word operator*(const Word& a, const Word& b) {
    Word r = a;
    for (const auto& [g, s] : b.letters_) r.append(g, s);
    return r;
}

Word Word::inverse() const {
    Word r;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        r.letters_.emplace_back(it->first, -it->second);
    return r;
}

Word Word::power(const Word& w, int k) {
    Word r;
    Word base = k >= 0 ? w : w.inverse();
    for (int n = std::abs(k); n > 0; --n) r = r * base;
    return r;
}

Word Word::commutator(const Word& a, const Word& b) {
    return a * b * a.inverse() * b.inverse();
}

Word Word::parse(const std::string& text, const std::vector<std::string>& gens) {
    Word w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;
        int sign = 1;
        if (tok.size() > 1 && tok.back() == '^') {
            sign = -1;
            tok.pop_back();
        }
        int gen = -1;
        for (size_t k = 0; k < gens.size(); ++k)
            if (gens[k] == tok) { gen = static_cast<int>(k); break; }
        if (gen < 0) throw std::invalid_argument("unknown generator '" + tok + "'");
        w.append(gen, sign);
    }
    return w;
}

std::string Word::str(const std::vector<std::string>& gens) const {
    if (letters_.empty()) return "1";
    std::string out;
    for (const auto& [g, s] : letters_) {
        if (!out.empty()) out += ' ';
        out += gens[static_cast<size_t>(g)];
        if (s < 0) out += '^';
    }
    return out;
}

int GroupPresentation::gen_index(const std::string& name) const {
    for (size_t k = 0; k < gens.size(); ++k)
        if (gens[k] == name) return static_cast<int>(k);
    return -1;
}

GroupPresentation presentation_235() {
    GroupPresentation p;
    p.gens = {"x1", "x2", "x3", "h"};
    Word x1 = Word::letter(0, 1), x2 = Word::letter(1, 1), x3 = Word::letter(2, 1),
         h = Word::letter(3, 1);
    p.relators.push_back(Word::commutator(h, x1));
    p.relators.push_back(Word::commutator(h, x2));
    p.relators.push_back(Word::commutator(h, x3));
    p.relators.push_back(Word::power(x1, 2) * h.inverse());  // x1^2 = h
    p.relators.push_back(Word::power(x2, 3) * h);            // x2^3 = h^{-1}
    p.relators.push_back(Word::power(x3, 5) * h);            // x3^5 = h^{-1}
    p.relators.push_back(x1 * x2 * x3);                      // x1 x2 x3 = 1
    return p;
}

Rep::Rep(GroupPresentation pres, std::vector<ExactMatrix> images)
    : pres_(std::move(pres)), images_(std::move(images)) {
    if (images_.size() != pres_.gens.size())
        throw std::invalid_argument("one image required per generator");
    if (images_.empty()) throw std::invalid_argument("empty generator list");
    dim_ = images_.front().rows();
    for (const auto& m : images_) {
        if (m.rows() != dim_ || m.cols() != dim_)
            throw std::invalid_argument("generator images must be square of equal size");
        auto inv = m.inverse();
        if (!inv) throw std::invalid_argument("generator image is singular");
        inverses_.push_back(std::move(*inv));
    }
    auto ok = verify_relations(pres_, images_);
    for (size_t k = 0; k < ok.size(); ++k)
        if (!ok[k])
            throw std::invalid_argument("relator " + std::to_string(k) +
                                        " is not satisfied by the generator images");
}

ExactMatrix Rep::eval(const Word& w) const {
    ExactMatrix acc = ExactMatrix::identity(dim_);
    for (const auto& [g, s] : w.letters()) {
        if (g < 0 || static_cast<size_t>(g) >= images_.size())
            throw std::invalid_argument("word refers to a generator outside the presentation");
        acc = acc * (s > 0 ? images_[static_cast<size_t>(g)] : inverses_[static_cast<size_t>(g)]);
    }
    return acc;
}

ExactMatrix Rep::eval(const std::string& word_text) const {
    return eval(Word::parse(word_text, pres_.gens));
}

std::vector<bool> verify_relations(const GroupPresentation& pres,
                                   const std::vector<ExactMatrix>& images) {
    std::vector<ExactMatrix> inverses;
    inverses.reserve(images.size());
    for (const auto& m : images) {
        auto inv = m.inverse();
        if (!inv) throw std::invalid_argument("generator image is singular");
        inverses.push_back(std::move(*inv));
    }
    int d = images.empty() ? 0 : images.front().rows();
    std::vector<bool> out;
    out.reserve(pres.relators.size());
    for (const auto& rel : pres.relators) {
        ExactMatrix acc = ExactMatrix::identity(d);
        for (const auto& [g, s] : rel.letters())
            acc = acc * (s > 0 ? images[static_cast<size_t>(g)] : inverses[static_cast<size_t>(g)]);
        out.push_back(acc.is_identity());
    }
    return out;
}

Rep rho_235(int variant) {
    if (variant != 1 && variant != 2) throw std::invalid_argument("variant must be 1 or 2");
    Scalar alpha, beta;
    if (variant == 1) {
        alpha = Scalar(Rational(1, 4), Rational(0), Rational(1, 4), Rational(0));
        beta = Scalar(Rational(-1, 4), Rational(0), Rational(1, 4), Rational(0));
    } else {
        alpha = Scalar(Rational(1, 4), Rational(0), Rational(-1, 4), Rational(0));
        beta = Scalar(Rational(1, 4), Rational(0), Rational(1, 4), Rational(0));
    }
    Scalar i = Scalar::unit_i();
    Scalar half = Scalar::fraction(1, 2);
    ExactMatrix X1(2, 2), X2(2, 2), X3(2, 2), H(2, 2);
    X1.at(0, 0) = i;
    X1.at(1, 1) = -i;
    X2.at(0, 0) = half - alpha * i;
    X2.at(0, 1) = beta;
    X2.at(1, 0) = -beta;
    X2.at(1, 1) = half + alpha * i;
    X3.at(0, 0) = alpha - half * i;
    X3.at(0, 1) = -beta * i;
    X3.at(1, 0) = -beta * i;
    X3.at(1, 1) = alpha + half * i;
    H.at(0, 0) = -Scalar::one();
    H.at(1, 1) = -Scalar::one();
    return Rep(presentation_235(), {X1, X2, X3, H});
}

Rep rho1_extension(const Rep& rho) {
    GroupPresentation ext = rho.presentation();
    int t = static_cast<int>(ext.gens.size());
    ext.gens.push_back("t");
    Word tw = Word::letter(t, 1);
    for (int g = 0; g < t; ++g) ext.relators.push_back(Word::commutator(tw, Word::letter(g, 1)));
    std::vector<ExactMatrix> images;
    for (int g = 0; g < t; ++g) images.push_back(rho.image(g));
    images.push_back(-ExactMatrix::identity(rho.dim()));
    return Rep(std::move(ext), std::move(images));
}

std::vector<SU2Matrix> enumerate_image(const Rep& rho, size_t cap) {
    if (rho.dim() != 2) throw std::invalid_argument("expected a 2-dimensional representation");
    std::vector<SU2Matrix> gens;
    gens.reserve(rho.presentation().gens.size());
    for (size_t g = 0; g < rho.presentation().gens.size(); ++g)
        gens.emplace_back(rho.image(static_cast<int>(g)));

    auto cmp = [](const SU2Matrix& a, const SU2Matrix& b) { return a.cmp(b) < 0; };
    std::set<SU2Matrix, decltype(cmp)> seen(cmp);
    std::vector<SU2Matrix> out;
    std::deque<SU2Matrix> queue;
    auto push = [&](const SU2Matrix& m) {
        if (seen.insert(m).second) {
            if (seen.size() > cap) throw image_cap_exceeded();
            out.push_back(m);
            queue.push_back(m);
        }
    };
    push(SU2Matrix::identity());
    for (const auto& g : gens) push(g);
    while (!queue.empty()) {
        SU2Matrix m = queue.front();
        queue.pop_front();
        for (const auto& g : gens) push(m * g);
    }
    return out;
}

Scalar circle_weight(const SU2Matrix& g) {
    Scalar t = g.trace();
    return t * t.conj() - Scalar::one();
}

ExactMatrix sym_power(const SU2Matrix& g, int m) {
    if (m < 0) throw std::invalid_argument("negative symmetric power");
    SU2Matrix gi = g.inverse();
    // basis v_k = x^{m-k} y^k; column k = coefficients of (Ax+By)^{m-k} (Cx+Dy)^k
    // over that basis, with (A,B;C,D) = g^{-1}
    ExactMatrix out(m + 1, m + 1);
    for (int k = 0; k <= m; ++k) {
        // expand the two binomial powers as coefficient vectors indexed by y-degree
        std::vector<Scalar> first(static_cast<size_t>(m - k) + 1), second(static_cast<size_t>(k) + 1);
        first[0] = Scalar::one();
        for (int d = 0; d < m - k; ++d) {  // repeated multiplication by (Ax + By)
            std::vector<Scalar> nxt(first.size() + 1);
            for (size_t s = 0; s + 1 < first.size() + 1; ++s) {
                if (first[s].is_zero()) continue;
                nxt[s] += first[s] * gi.a();
                nxt[s + 1] += first[s] * gi.b();
            }
            first = std::move(nxt);
        }
        second[0] = Scalar::one();
        for (int d = 0; d < k; ++d) {  // repeated multiplication by (Cx + Dy)
            std::vector<Scalar> nxt(second.size() + 1);
            for (size_t s = 0; s + 1 < second.size() + 1; ++s) {
                if (second[s].is_zero()) continue;
                nxt[s] += second[s] * gi.c();
                nxt[s + 1] += second[s] * gi.d();
            }
            second = std::move(nxt);
        }
        for (size_t s = 0; s < first.size(); ++s)
            for (size_t t = 0; t < second.size(); ++t) {
                if (first[s].is_zero() || second[t].is_zero()) continue;
                out.at(static_cast<int>(s + t), k) += first[s] * second[t];
            }
    }
    return out;
}

Rep compose_ad(const Rep& rho) {
    std::vector<ExactMatrix> images;
    for (size_t g = 0; g < rho.presentation().gens.size(); ++g)
        images.push_back(ad_matrix(SU2Matrix(rho.image(static_cast<int>(g)))));
    return Rep(rho.presentation(), std::move(images));
}

Rep compose_sym(const Rep& rho, int m) {
    std::vector<ExactMatrix> images;
    for (size_t g = 0; g < rho.presentation().gens.size(); ++g)
        images.push_back(sym_power(SU2Matrix(rho.image(static_cast<int>(g))), m));
    return Rep(rho.presentation(), std::move(images));
}

Rep trivial_rep(const GroupPresentation& pres, int dim) {
    std::vector<ExactMatrix> images(pres.gens.size(), ExactMatrix::identity(dim));
    return Rep(pres, std::move(images));
}

}  // namespace thetainv
