#include "property_laws.hpp"

#include "test_support.hpp"

#include "thetainv/json_io.hpp"
#include "thetainv/repro.hpp"
#include "thetainv/surgery.hpp"
#include "thetainv/twisted_homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace laws {

using namespace thetainv;
using namespace testsup;

namespace {

std::string show(long a, long b, long c) {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

LaurentPoly lp_shift(const LaurentPoly& p, long s) {
    return LaurentPoly::monomial(s, Scalar::one()) * p;
}

TensorSqLaurent tsql_shift(const TensorSqLaurent& u, long s) {
    TensorSqLaurent r;
    for (const auto& [e, c] : u.terms()) r.add_term(e + s, c);
    return r;
}

Scalar det2(const ExactMatrix& m) {
    return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
}

// words drawn over the group's own generators, rendered in CLI syntax
std::string rand_word_text(Rng& rng, const GroupPresentation& pres, int max_len = 3) {
    Word w = rand_word(rng, static_cast<int>(pres.gens.size()), max_len);
    return w.empty() ? "1" : w.str(pres.gens);
}

SurgerySpec rand_surgery_spec(Rng& rng) {
    SurgerySpec spec;
    spec.parity = static_cast<int>(rand_long(rng, 0, 1));
    spec.rep.variant = static_cast<int>(rand_long(rng, 1, 2));
    spec.rep.extended = rand_long(rng, 0, 1) == 1;
    GroupPresentation pres = presentation_235();
    for (auto& e : spec.edges) {
        e.word = rand_word_text(rng, pres, 2);
        e.t_exp = rand_long(rng, -3, 3);
    }
    return spec;
}

// relators that hold in every representation of the base presentation:
// products of conjugates of base relators
GroupPresentation rand_consequence_presentation(Rng& rng, const GroupPresentation& base) {
    GroupPresentation pres;
    pres.gens = base.gens;
    int count = static_cast<int>(rand_long(rng, 1, 3));
    int n = static_cast<int>(base.gens.size());
    for (int k = 0; k < count; ++k) {
        Word rel;
        int factors = static_cast<int>(rand_long(rng, 1, 2));
        for (int f = 0; f < factors; ++f) {
            const Word& r =
                base.relators[static_cast<size_t>(rand_long(rng, 0, static_cast<long>(base.relators.size()) - 1))];
            Word conj = rand_word(rng, n, 3);
            rel = rel * (conj * r * conj.inverse());
        }
        pres.relators.push_back(rel);
    }
    return pres;
}

// rebase a representation onto a consequence presentation (same generators)
Rep rebase(const Rep& rho, const GroupPresentation& pres) {
    std::vector<ExactMatrix> images;
    for (size_t g = 0; g < pres.gens.size(); ++g) images.push_back(rho.image(static_cast<int>(g)));
    return Rep(pres, std::move(images));
}

// conjugate every generator image by the shear I + a*E(i,j); relators and
// cohomology are unchanged, the matrices are not
Rep shear_conjugate(Rng& rng, const Rep& rho) {
    int d = rho.dim();
    if (d < 2) return rebase(rho, rho.presentation());
    int i = static_cast<int>(rand_long(rng, 0, d - 1));
    int j = static_cast<int>(rand_long(rng, 0, d - 2));
    if (j >= i) ++j;
    Scalar a = rand_scalar(rng);
    ExactMatrix s = ExactMatrix::identity(d);
    s.at(i, j) = a;
    ExactMatrix sinv = ExactMatrix::identity(d);
    sinv.at(i, j) = -a;
    std::vector<ExactMatrix> images;
    for (size_t g = 0; g < rho.presentation().gens.size(); ++g)
        images.push_back(s * rho.image(static_cast<int>(g)) * sinv);
    return Rep(rho.presentation(), std::move(images));
}

const Rep& cached_rho(int variant) {
    static const Rep r1 = rho_235(1);
    static const Rep r2 = rho_235(2);
    return variant == 2 ? r2 : r1;
}

const Rep& cached_ad(int variant) {
    static const Rep a1 = compose_ad(rho_235(1));
    static const Rep a2 = compose_ad(rho_235(2));
    return variant == 2 ? a2 : a1;
}

}  // namespace

LawResult law_field_axioms() {
    LawResult r{.name = "field axioms and conjugation"};
    Rng rng(101);
    for (int k = 0; k < 1000; ++k) {
        Scalar x = rand_scalar(rng), y = rand_scalar(rng), z = rand_scalar(rng);
        bool ok = (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) && x * y == y * x &&
                  x + y == y + x && x * (y + z) == x * y + x * z && (x + (-x)).is_zero() &&
                  (x * y).conj() == x.conj() * y.conj() &&
                  (x * y).galois_sqrt5() == x.galois_sqrt5() * y.galois_sqrt5() &&
                  x.conj().conj() == x;
        if (ok && !x.is_zero()) ok = x * x.inverse() == Scalar::one();
        if (!ok) r.fail("triple " + x.str() + ", " + y.str() + ", " + z.str());
        ++r.cases;
    }
    return r;
}

LawResult law_laurent_ring() {
    LawResult r{.name = "laurent ring laws and substitution"};
    Rng rng(102);
    for (int k = 0; k < 1000; ++k) {
        LaurentPoly f = rand_laurent(rng), g = rand_laurent(rng), h = rand_laurent(rng);
        long sub = rand_long(rng, -3, 3);
        bool ok = f * g == g * f && (f * g) * h == f * (g * h) &&
                  (f * g).substitute(sub) == f.substitute(sub) * g.substitute(sub) &&
                  f * (g + h) == f * g + f * h;
        if (!ok) r.fail("factors " + f.str() + " | " + g.str());
        ++r.cases;
    }
    return r;
}

LawResult law_rank_transpose() {
    LawResult r{.name = "rank equals transpose rank"};
    Rng rng(103);
    for (int k = 0; k < 1000; ++k) {
        int rows = static_cast<int>(rand_long(rng, 1, 5));
        int cols = static_cast<int>(rand_long(rng, 1, 5));
        ExactMatrix m = rand_matrix(rng, rows, cols);
        if (rows >= 2 && rand_long(rng, 0, 1) == 1) {
            // force a dependent row
            Scalar lambda = rand_scalar(rng);
            for (int j = 0; j < cols; ++j) m.at(rows - 1, j) = m.at(0, j) * lambda;
        }
        if (m.rank() != m.transpose().rank()) r.fail("matrix\n" + m.str());
        ++r.cases;
    }
    return r;
}

LawResult law_rational_rank_invariance() {
    LawResult r{.name = "rational rank invariance"};
    Rng rng(104);
    for (int k = 0; k < 1000; ++k) {
        std::vector<TriLaurent> fam;
        int n = static_cast<int>(rand_long(rng, 2, 4));
        for (int i = 0; i < n; ++i) fam.push_back(rand_trilaurent(rng));
        if (rand_long(rng, 0, 1) == 1) fam.push_back(fam[0]);  // make it degenerate sometimes
        int base = rank_over_Q(fam);

        std::vector<TriLaurent> shuffled = fam;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        size_t pick = static_cast<size_t>(rand_long(rng, 0, static_cast<long>(shuffled.size()) - 1));
        shuffled[pick] = shuffled[pick] * Scalar(rand_nonzero_rational(rng));
        if (rank_over_Q(shuffled) != base) r.fail("family of size " + std::to_string(fam.size()));
        ++r.cases;
    }
    return r;
}

LawResult law_theta_weight_symmetry() {
    LawResult r{.name = "theta weight full symmetry"};
    Rng rng(105);
    for (int k = 0; k < 1000; ++k) {
        std::array<TensorSq, 3> t{rand_tensor_sq(rng), rand_tensor_sq(rng), rand_tensor_sq(rng)};
        Scalar base = theta_weight(t[0], t[1], t[2]);
        for (const auto& sp : perms3()) {
            if (theta_weight(t[static_cast<size_t>(sp.p[0])], t[static_cast<size_t>(sp.p[1])],
                             t[static_cast<size_t>(sp.p[2])]) != base) {
                r.fail("permutation breaks symmetry at case " + std::to_string(k));
                break;
            }
        }
        ++r.cases;
    }
    return r;
}

LawResult law_theta_weight_conjugation() {
    LawResult r{.name = "theta weight conjugation invariance"};
    Rng rng(106);
    for (int k = 0; k < 1000; ++k) {
        TensorSq p = rand_tensor_sq(rng), q = rand_tensor_sq(rng), s = rand_tensor_sq(rng);
        TensorSq a = ad_of(rand_image_elt(rng));
        TensorSq b = ad_of(rand_image_elt(rng));
        Scalar base = theta_weight(p, q, s);
        bool ok = theta_weight(tsq_mul(a, p), tsq_mul(a, q), tsq_mul(a, s)) == base &&
                  theta_weight(tsq_mul(p, b), tsq_mul(q, b), tsq_mul(s, b)) == base;
        if (!ok) r.fail("case " + std::to_string(k));
        ++r.cases;
    }
    return r;
}

LawResult law_conjugation_tensor_multiplicative() {
    LawResult r{.name = "conjugation tensor multiplicative"};
    r.exhaustive = true;
    const auto& img = image_235(1);
    std::map<SU2Matrix, TensorSq> ads;
    for (const auto& g : img) ads.emplace(g, ad_of(g));
    for (const auto& g : img) {
        for (const auto& h : img) {
            SU2Matrix gh = g * h;
            if (ad_of(gh) != tsq_mul(ads.at(g), ads.at(h))) {
                r.fail("pair " + g.str() + " , " + h.str());
            }
            ++r.cases;
        }
        if (!r.ok) break;
    }
    return r;
}

LawResult law_conjugation_trace() {
    LawResult r{.name = "conjugation trace equals circle weight"};
    Rng rng(107);
    for (int variant : {1, 2}) {
        for (const auto& g : image_235(variant)) {
            if (endo_trace(ad_of(g)) != circle_weight(g)) r.fail("image element " + g.str());
            ++r.cases;
        }
    }
    const Rep& rho = cached_rho(1);
    while (r.cases < 1000) {
        SU2Matrix g(rho.eval(rand_word(rng, 4)));
        if (endo_trace(ad_of(g)) != circle_weight(g)) r.fail("word image " + g.str());
        ++r.cases;
    }
    return r;
}

LawResult law_structure_form_invariance() {
    LawResult r{.name = "structure form invariance"};
    Rng rng(108);
    for (int k = 0; k < 1000; ++k) {
        LieElt x = rand_lie(rng), y = rand_lie(rng), z = rand_lie(rng);
        bool ok = bform(bracket(x, y), z) == bform(x, bracket(y, z)) &&
                  triple_trace(x, y, z) == -triple_trace(y, x, z) &&
                  triple_trace(x, y, z) == triple_trace(y, z, x);
        if (!ok) r.fail("triple " + x.str() + " | " + y.str() + " | " + z.str());
        ++r.cases;
    }
    return r;
}

LawResult law_edge_pairing_invariance() {
    LawResult r{.name = "edge pairing invariance"};
    Rng rng(109);
    for (int k = 0; k < 1000; ++k) {
        const SU2Matrix& g = rand_image_elt(rng);
        ExactMatrix a = ad_matrix(g);

        TensorSq u = rand_tensor_sq(rng), v = rand_tensor_sq(rng);
        bool ok = tr_pair(apply_second(a, u), apply_second(a, v)) == tr_pair(u, v) &&
                  tr_pair(apply_first(a, u), apply_first(a, v)) == tr_pair(u, v);

        LaurentPoly f = rand_laurent(rng), gp = rand_laurent(rng);
        long s = rand_long(rng, -4, 4);
        ok = ok && tr_pair(lp_shift(f, s), lp_shift(gp, s)) == tr_pair(f, gp);

        TensorSqLaurent U = rand_tsql(rng), V = rand_tsql(rng);
        auto second = [&](const TensorSq& c) { return apply_second(a, c); };
        auto first = [&](const TensorSq& c) { return apply_first(a, c); };
        ok = ok && tr_pair(tsql_map(U, second), tsql_map(V, second)) == tr_pair(U, V) &&
             tr_pair(tsql_map(U, first), tsql_map(V, first)) == tr_pair(U, V) &&
             tr_pair(tsql_shift(U, s), tsql_shift(V, s)) == tr_pair(U, V);
        if (!ok) r.fail("case " + std::to_string(k));
        ++r.cases;
    }
    return r;
}

LawResult law_difference_class_well_defined() {
    LawResult r{.name = "difference class well defined"};
    Rng rng(110);
    for (int k = 0; k < 1000; ++k) {
        long a = rand_long(rng, -6, 6), b = rand_long(rng, -6, 6), c = rand_long(rng, -6, 6);
        long s = rand_long(rng, -5, 5);
        bool ok = true;
        for (int eps : {0, 1}) {
            ok = ok && w_scalar(eps, a + s, b + s, c + s) == w_scalar(eps, a, b, c) &&
                 w_scalar(eps, b, c, a) == w_scalar(eps, a, b, c);
            SThetaElt base = embed_class(w_scalar(eps, a, b, c));
            std::array<long, 3> v{a, b, c};
            for (const auto& sp : perms3()) {
                SThetaElt img = embed_class(w_scalar(eps, v[static_cast<size_t>(sp.p[0])],
                                                     v[static_cast<size_t>(sp.p[1])],
                                                     v[static_cast<size_t>(sp.p[2])]));
                SThetaElt want = (eps == 0 && sp.sign < 0) ? -base : base;
                ok = ok && img == want;
            }
        }
        if (!ok) r.fail("arguments " + show(a, b, c) + " shift " + std::to_string(s));
        ++r.cases;
    }
    return r;
}

LawResult law_embedding_symmetry() {
    LawResult r{.name = "embedding symmetry invariants"};
    Rng rng(111);
    for (int k = 0; k < 1000; ++k) {
        ThetaClass c(static_cast<int>(rand_long(rng, 0, 1)));
        int terms = static_cast<int>(rand_long(rng, 0, 3));
        ThetaClass filled(c.parity());
        for (int t = 0; t < terms; ++t)
            filled.add(rand_long(rng, -5, 5), rand_long(rng, -5, 5), rand_long(rng, -5, 5),
                       Scalar(rand_rational(rng)));
        if (!embed_class(filled).well_formed()) r.fail("parity " + std::to_string(filled.parity()));
        ++r.cases;
    }
    return r;
}

LawResult law_embedding_independence() {
    LawResult r{.name = "embedding independence structure"};
    r.exhaustive = true;

    // Exhaustive scan of canonical triples (0,b,c) with entries in [0,8].
    // The embedding realizes the inversion identification, so the exact
    // structure is: parity-0 triples with c = 2b embed to zero; triples with
    // b+c divisible by 3 pair with (0,c-b,c) up to sign (-1 for parity 0,
    // +1 for parity 1); everything else is independent.  Expected ranks:
    // parity 0: 28 triples, 4 zero, 3 glued pairs -> 21;
    // parity 1: 45 triples, none zero, 5 glued pairs -> 40.
    for (int eps : {0, 1}) {
        std::vector<std::array<long, 3>> triples;
        for (long b = 0; b <= 8; ++b)
            for (long c = b; c <= 8; ++c) {
                if (eps == 0 && (b == 0 || b == c)) continue;
                triples.push_back({0, b, c});
            }
        long expected_total = eps == 0 ? 28 : 45;
        if (static_cast<long>(triples.size()) != expected_total)
            r.fail("triple count parity " + std::to_string(eps));

        std::map<std::array<long, 3>, SThetaElt> embeds;
        for (const auto& t : triples) {
            embeds.emplace(t, embed_class(ThetaClass::normal_form(eps, t[0], t[1], t[2], Scalar::one())));
            ++r.cases;
        }

        auto partner = [](const std::array<long, 3>& t) {
            std::array<long, 3> p{0, t[2] - t[1], t[2]};
            if (p[1] > p[2]) std::swap(p[1], p[2]);
            return p;
        };

        std::vector<TriLaurent> nonzero;
        std::set<std::array<long, 3>> class_reps;
        for (const auto& t : triples) {
            bool expect_zero = eps == 0 && t[2] == 2 * t[1];
            if (embeds.at(t).is_zero() != expect_zero)
                r.fail("zero rule at " + show(t[0], t[1], t[2]) + " parity " + std::to_string(eps));
            ++r.cases;
            if (expect_zero) continue;
            nonzero.push_back(embeds.at(t).image());

            if ((t[1] + t[2]) % 3 == 0) {
                std::array<long, 3> p = partner(t);
                if (p != t) {
                    const SThetaElt& a = embeds.at(t);
                    const SThetaElt& b = embeds.at(p);
                    bool glued = eps == 0 ? (a == -b) : (a == b);
                    if (!glued) r.fail("pair rule at " + show(t[0], t[1], t[2]));
                    ++r.cases;
                    class_reps.insert(std::min(t, p));
                    continue;
                }
            }
            class_reps.insert(t);
        }

        int expected_rank = eps == 0 ? 21 : 40;
        if (rank_over_Q(nonzero) != expected_rank)
            r.fail("full rank parity " + std::to_string(eps));
        ++r.cases;
        std::vector<TriLaurent> reps;
        for (const auto& t : class_reps) reps.push_back(embeds.at(t).image());
        if (static_cast<int>(reps.size()) != expected_rank || rank_over_Q(reps) != expected_rank)
            r.fail("representative rank parity " + std::to_string(eps));
        ++r.cases;
    }

    // randomized extension of the zero and gluing rules over a wider range
    Rng rng(112);
    for (int k = 0; k < 1000; ++k) {
        int eps = static_cast<int>(rand_long(rng, 0, 1));
        long b = rand_long(rng, 0, 30);
        long c = rand_long(rng, b, 30);
        SThetaElt e = embed_class(ThetaClass::normal_form(eps, 0, b, c, Scalar::one()));
        bool expect_zero = eps == 0 && (b == 0 || b == c || c == 2 * b);
        if (e.is_zero() != expect_zero) r.fail("random zero rule at " + show(0, b, c));
        if (!expect_zero && (b + c) % 3 == 0 && c != 2 * b) {
            SThetaElt p = embed_class(ThetaClass::normal_form(eps, 0, c - b, c, Scalar::one()));
            bool glued = eps == 0 ? (e == -p) : (e == p);
            if (!glued) r.fail("random pair rule at " + show(0, b, c));
        }
        ++r.cases;
    }
    return r;
}

LawResult law_decorated_weight_well_defined() {
    LawResult r{.name = "decorated weight map well defined"};
    Rng rng(113);
    for (int k = 0; k < 1000; ++k) {
        DecoratedTheta d;
        d.parity = static_cast<int>(rand_long(rng, 0, 1));
        for (auto& e : d.edges) e = rand_tsql(rng);
        SThetaElt base = w_lie(d);

        const auto& sp = perms3()[static_cast<size_t>(rand_long(rng, 0, 5))];
        DecoratedTheta perm = d;
        for (int i = 0; i < 3; ++i)
            perm.edges[static_cast<size_t>(i)] = d.edges[static_cast<size_t>(sp.p[i])];
        SThetaElt want = (d.parity == 0 && sp.sign < 0) ? -base : base;
        bool ok = w_lie(perm) == want;

        TensorSq a = ad_of(rand_image_elt(rng));
        TensorSq b = ad_of(rand_image_elt(rng));
        DecoratedTheta left = d, right = d;
        for (int i = 0; i < 3; ++i) {
            left.edges[static_cast<size_t>(i)] =
                tsql_map(d.edges[static_cast<size_t>(i)], [&](const TensorSq& c) { return tsq_mul(a, c); });
            right.edges[static_cast<size_t>(i)] =
                tsql_map(d.edges[static_cast<size_t>(i)], [&](const TensorSq& c) { return tsq_mul(c, b); });
        }
        ok = ok && w_lie(left) == base && w_lie(right) == base;
        if (!ok) r.fail("case " + std::to_string(k));
        ++r.cases;
    }
    return r;
}

LawResult law_standard_family_extremal() {
    LawResult r{.name = "standard family extremal exponents"};
    for (long p = 3; p <= 1002; ++p) {
        LaurentPoly sub = f_poly(p).substitute3(0, 1, 3);
        bool ok = sub.max_degree() && *sub.max_degree() == 3 * p - 1 && sub.min_degree() &&
                  *sub.min_degree() == -(3 * p - 1);
        if (!ok) r.fail("p = " + std::to_string(p));
        ++r.cases;
    }
    return r;
}

LawResult law_representation_exactness() {
    LawResult r{.name = "representation exactness and closure"};
    Rng rng(114);
    GroupPresentation pres = presentation_235();
    for (int variant : {1, 2}) {
        const Rep& rho = cached_rho(variant);
        auto checks = verify_relations(pres, {rho.image(0), rho.image(1), rho.image(2), rho.image(3)});
        for (bool okrel : checks) {
            if (!okrel) r.fail("relator fails, variant " + std::to_string(variant));
            ++r.cases;
        }
        if (rho.eval("h") != -ExactMatrix::identity(2)) r.fail("central generator image");
        ++r.cases;
        Rep ext = rho1_extension(rho);
        if (ext.eval("t") != -ExactMatrix::identity(2)) r.fail("extension image");
        ++r.cases;

        const auto& img = image_235(variant);
        if (img.size() != 120) r.fail("image size variant " + std::to_string(variant));
        ++r.cases;
        std::set<SU2Matrix> all(img.begin(), img.end());
        for (const auto& g : img) {
            ExactMatrix m = g.to_matrix();
            bool ok = (m * m.conj().transpose()).is_identity() && det2(m) == Scalar::one() &&
                      all.count(g.inverse()) == 1;
            if (!ok) r.fail("image element " + g.str());
            ++r.cases;
        }
        while (r.cases < (variant == 1 ? 500 : 1000)) {
            SU2Matrix g(cached_rho(variant).eval(rand_word(rng, 4)));
            if (all.count(g) != 1) r.fail("word image escapes the enumerated set");
            ++r.cases;
        }
    }
    return r;
}

LawResult law_character_reality() {
    LawResult r{.name = "character reality"};
    Rng rng(115);
    auto check = [&](const SU2Matrix& g) {
        Scalar tr = g.trace();
        Scalar twice_real(tr.coord(0) * 2, Rational(0), tr.coord(2) * 2, Rational(0));
        Scalar w = circle_weight(g);
        return tr + tr.conj() == twice_real && w.conj() == w;
    };
    for (int variant : {1, 2})
        for (const auto& g : image_235(variant)) {
            if (!check(g)) r.fail("image element " + g.str());
            ++r.cases;
        }
    while (r.cases < 1000) {
        if (!check(SU2Matrix(cached_rho(1).eval(rand_word(rng, 4))))) r.fail("word image");
        ++r.cases;
    }
    return r;
}

LawResult law_symmetric_power_multiplicative() {
    LawResult r{.name = "symmetric power multiplicative"};
    Rng rng(116);
    for (int k = 0; k < 1000; ++k) {
        const SU2Matrix& g = rand_image_elt(rng);
        const SU2Matrix& h = rand_image_elt(rng);
        int m = static_cast<int>(rand_long(rng, 2, 4));
        if (sym_power(g * h, m) != sym_power(g, m) * sym_power(h, m))
            r.fail("degree " + std::to_string(m));
        ++r.cases;
    }
    return r;
}

LawResult law_word_evaluation() {
    LawResult r{.name = "word evaluation homomorphism"};
    Rng rng(117);
    for (int k = 0; k < 1000; ++k) {
        const Rep& rho = cached_rho(static_cast<int>(rand_long(rng, 1, 2)));
        Word a = rand_word(rng, 4), b = rand_word(rng, 4);
        bool ok = rho.eval(a * b) == rho.eval(a) * rho.eval(b) &&
                  rho.eval(a.inverse()) * rho.eval(a) == ExactMatrix::identity(2);
        if (!ok) r.fail("case " + std::to_string(k));
        ++r.cases;
    }
    return r;
}

LawResult law_cochain_complex() {
    LawResult r{.name = "cochain maps compose to zero"};
    Rng rng(118);
    GroupPresentation base = presentation_235();
    // fixed coefficient systems on the base presentation
    for (int variant : {1, 2}) {
        const Rep& rho = cached_rho(variant);
        for (const Rep* coeff : {&rho, &cached_ad(variant)}) {
            CochainMaps maps = cochain_maps(base, *coeff);
            if (!(maps.d1 * maps.d0).is_zero()) r.fail("base presentation");
            ++r.cases;
        }
    }
    // randomized consequence presentations
    while (r.cases < 1000) {
        GroupPresentation pres = rand_consequence_presentation(rng, base);
        int pick = static_cast<int>(rand_long(rng, 0, 3));
        int variant = (pick & 1) + 1;
        const Rep& src = pick < 2 ? cached_rho(variant) : cached_ad(variant);
        Rep rep = rebase(src, pres);
        CochainMaps maps = cochain_maps(pres, rep);
        if (!(maps.d1 * maps.d0).is_zero()) r.fail("consequence presentation");
        ++r.cases;
    }
    return r;
}

namespace {

// sample a finite-image coefficient system, optionally shear-conjugated;
// returns (rep, expected fixed-space dimension)
std::pair<Rep, int> rand_coeff_system(Rng& rng) {
    int variant = static_cast<int>(rand_long(rng, 1, 2));
    const Rep& rho = cached_rho(variant);
    long pick = rand_long(rng, 0, 9);
    Rep rep = [&] {
        if (pick <= 2) return trivial_rep(rho.presentation(), 1);
        if (pick <= 5) return rebase(rho, rho.presentation());
        if (pick <= 8) return cached_ad(variant);
        return compose_sym(rho, 4);
    }();
    int h0 = pick <= 2 ? 1 : 0;  // the nontrivial systems here are all fixed-point free
    if (rand_long(rng, 0, 1) == 1) rep = shear_conjugate(rng, rep);
    return {std::move(rep), h0};
}

}  // namespace

LawResult law_finite_image_semisimplicity() {
    LawResult r{.name = "finite image semisimplicity"};
    Rng rng(119);
    for (int k = 0; k < 1000; ++k) {
        auto [rep, h0] = rand_coeff_system(rng);
        auto dims = cohomology_dims(rep.presentation(), rep);
        if (dims.second != 0) r.fail("h1 nonzero at case " + std::to_string(k));
        if (dims.first != h0) r.fail("h0 off at case " + std::to_string(k));
        ++r.cases;
    }
    return r;
}

LawResult law_fixed_space_dimension() {
    LawResult r{.name = "fixed space equals degree zero"};
    Rng rng(120);
    for (int k = 0; k < 1000; ++k) {
        auto [rep, h0] = rand_coeff_system(rng);
        (void)h0;
        if (invariants_dim(rep) != cohomology_dims(rep.presentation(), rep).first)
            r.fail("case " + std::to_string(k));
        ++r.cases;
    }
    return r;
}

LawResult law_character_decomposition() {
    LawResult r{.name = "character decomposition elementwise"};
    Rng rng(121);
    auto check = [](const SU2Matrix& g) {
        Scalar chi = ad_matrix(g).trace();
        return chi == sym_power(g, 2).trace() && chi == circle_weight(g) &&
               chi * chi == Scalar::one() + sym_power(g, 2).trace() + sym_power(g, 4).trace();
    };
    for (int variant : {1, 2}) {
        if (!decomposition_check(cached_rho(variant))) r.fail("aggregate check");
        ++r.cases;
        for (const auto& g : image_235(variant)) {
            if (!check(g)) r.fail("image element " + g.str());
            ++r.cases;
        }
    }
    while (r.cases < 1000) {
        if (!check(SU2Matrix(cached_rho(1).eval(rand_word(rng, 4))))) r.fail("word image");
        ++r.cases;
    }
    return r;
}

LawResult law_surgery_conjugation_invariance() {
    LawResult r{.name = "surgery conjugation invariance"};
    Rng rng(122);
    GroupPresentation pres = presentation_235();
    for (int k = 0; k < 1000; ++k) {
        SurgerySpec spec = rand_surgery_spec(rng);
        std::string prefix = rand_word_text(rng, pres, 3);
        SurgerySpec moved = spec;
        for (auto& e : moved.edges)
            e.word = prefix == "1" ? e.word : (e.word == "1" ? prefix : prefix + " " + e.word);
        if (z_theta_surgery(moved).image != z_theta_surgery(spec).image)
            r.fail("prefix " + prefix);
        ++r.cases;
    }
    return r;
}

LawResult law_surgery_shift_invariance() {
    LawResult r{.name = "surgery shift invariance"};
    Rng rng(123);
    for (int k = 0; k < 1000; ++k) {
        SurgerySpec spec = rand_surgery_spec(rng);
        long s = rand_long(rng, -4, 4);
        SurgerySpec moved = spec;
        for (auto& e : moved.edges) e.t_exp += s;
        if (z_theta_surgery(moved).image != z_theta_surgery(spec).image)
            r.fail("shift " + std::to_string(s));
        ++r.cases;
    }
    return r;
}

LawResult law_cover_linearity() {
    LawResult r{.name = "cover value linear in sheet count"};
    Rng rng(124);
    GroupPresentation pres = presentation_235();
    for (int k = 0; k < 1000; ++k) {
        std::string g = rand_word_text(rng, pres, 2);
        std::string h = rand_word_text(rng, pres, 2);
        long p = rand_long(rng, -4, 4), q = rand_long(rng, -4, 4);
        long rr = rand_long(rng, 1, 6);
        RepSelector sel{static_cast<int>(rand_long(rng, 1, 2)), rand_long(rng, 0, 1) == 1};
        SThetaElt once = cyclic_lift_value(g, h, p, q, 1, sel);
        if (cyclic_lift_value(g, h, p, q, rr, sel) != once * Scalar(rr))
            r.fail("r = " + std::to_string(rr));
        ++r.cases;
    }
    return r;
}

LawResult law_surgery_edge_permutation() {
    LawResult r{.name = "surgery edge permutation law"};
    Rng rng(125);
    for (int k = 0; k < 1000; ++k) {
        SurgerySpec spec = rand_surgery_spec(rng);
        const auto& sp = perms3()[static_cast<size_t>(rand_long(rng, 0, 5))];
        SurgerySpec perm = spec;
        for (int i = 0; i < 3; ++i)
            perm.edges[static_cast<size_t>(i)] = spec.edges[static_cast<size_t>(sp.p[i])];
        SThetaElt base = z_theta_surgery(spec).image;
        SThetaElt want = (spec.parity == 0 && sp.sign < 0) ? -base : base;
        if (z_theta_surgery(perm).image != want) r.fail("case " + std::to_string(k));
        ++r.cases;
    }
    return r;
}

LawResult law_serialization_round_trip() {
    LawResult r{.name = "serialization round trips"};
    Rng rng(126);
    GroupPresentation pres = presentation_235();

    auto trip = [&r](const auto& value, auto reader, const char* what) {
        std::string s1 = io::dumps(io::to_json(value));
        auto back = reader(io::parse_text(s1), "");
        if (io::dumps(io::to_json(back)) != s1) r.fail(std::string("re-serialization drift: ") + what);
        if (!(back == value)) r.fail(std::string("round trip changes value: ") + what);
        ++r.cases;
    };

    for (int k = 0; k < 1000; ++k) {
        trip(rand_scalar(rng), io::scalar_from_json, "scalar");
        trip(rand_laurent(rng), io::laurent_from_json, "laurent");
        trip(rand_trilaurent(rng), io::trilaurent_from_json, "trilaurent");

        ThetaClass cls(static_cast<int>(rand_long(rng, 0, 1)));
        int terms = static_cast<int>(rand_long(rng, 0, 3));
        for (int t = 0; t < terms; ++t)
            cls.add(rand_long(rng, -5, 5), rand_long(rng, -5, 5), rand_long(rng, -5, 5),
                    Scalar(rand_rational(rng)));
        trip(cls, io::theta_class_from_json, "theta class");
        trip(SThetaElt(cls.parity(), rand_trilaurent(rng)), io::stheta_from_json, "image element");
        trip(rand_tensor_sq(rng), io::tensor_sq_from_json, "tensor square");
        trip(rand_image_elt(rng), io::su2_from_json, "unitary matrix");
        trip(rand_matrix(rng, static_cast<int>(rand_long(rng, 1, 3)), static_cast<int>(rand_long(rng, 1, 3))),
             io::matrix_from_json, "matrix");

        SurgerySpec spec = rand_surgery_spec(rng);
        std::string spec_text = io::dumps(io::to_json(spec));
        SurgerySpec spec_back = io::surgery_spec_from_json(io::parse_text(spec_text), "");
        if (io::dumps(io::to_json(spec_back)) != spec_text) r.fail("surgery spec");
        ++r.cases;
    }

    // presentations: the fixed one and randomized consequence presentations
    auto pres_eq = [](const GroupPresentation& a, const GroupPresentation& b) {
        return a.gens == b.gens && a.relators == b.relators;
    };
    for (int k = 0; k < 100; ++k) {
        GroupPresentation p = k == 0 ? pres : rand_consequence_presentation(rng, pres);
        std::string s1 = io::dumps(io::to_json(p));
        GroupPresentation back = io::presentation_from_json(io::parse_text(s1), "");
        if (!pres_eq(p, back) || io::dumps(io::to_json(back)) != s1) r.fail("presentation");
        ++r.cases;
    }

    // certificates ride through their full structure
    for (int k = 0; k < 20; ++k) {
        std::vector<SurgerySpec> specs;
        int n = static_cast<int>(rand_long(rng, 1, 2));
        for (int i = 0; i < n; ++i) {
            SurgerySpec s = rand_surgery_spec(rng);
            s.parity = 0;
            specs.push_back(s);
        }
        Certificate cert = independence_certificate(specs);
        std::string s1 = io::dumps(io::to_json(cert));
        Certificate back = io::certificate_from_json(io::parse_text(s1), "");
        if (io::dumps(io::to_json(back)) != s1) r.fail("certificate");
        ++r.cases;
    }

    // reproduction reports
    for (const auto& name : repro_case_names()) {
        ReproReport rep = run_repro(name);
        std::string s1 = io::dumps(report_to_json(rep));
        ReproReport back = report_from_json(io::parse_text(s1), "");
        if (!(back == rep) || io::dumps(report_to_json(back)) != s1) r.fail("report " + name);
        ++r.cases;
    }

    // malformed inputs are rejected with positioned diagnostics
    auto rejects = [&r](const char* text) {
        try {
            io::parse_text(text);
            r.fail("malformed text accepted");
        } catch (const io::schema_error&) {
        }
        ++r.cases;
    };
    rejects("{bad");
    rejects("");
    try {
        io::scalar_from_json(io::parse_text("{\"r\":\"1/1\"}"), "x");
        r.fail("incomplete scalar accepted");
    } catch (const io::schema_error&) {
    }
    ++r.cases;
    try {
        io::scalar_from_json(io::parse_text("{\"r\":\"1/0\",\"i\":\"0/1\",\"s5\":\"0/1\",\"is5\":\"0/1\"}"), "x");
        r.fail("zero denominator accepted");
    } catch (const io::schema_error&) {
    }
    ++r.cases;
    return r;
}

LawResult law_reproduction_cases() {
    LawResult r{.name = "reproduction cases all match"};
    r.exhaustive = true;
    for (const auto& rep : run_all_repro()) {
        if (!rep.match) r.fail(rep.case_name + ": " + rep.computed);
        ++r.cases;
    }
    return r;
}

LawResult law_reproduction_determinism() {
    LawResult r{.name = "reproduction reports deterministic"};
    r.exhaustive = true;
    auto a = run_all_repro();
    auto b = run_all_repro();
    if (a.size() != b.size()) r.fail("case list size changed between runs");
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (io::dumps(report_to_json(a[i])) != io::dumps(report_to_json(b[i])))
            r.fail("report drift: " + a[i].case_name);
        ++r.cases;
    }
    return r;
}

std::vector<LawResult> run_all_laws() {
    return {
        law_field_axioms(),
        law_laurent_ring(),
        law_rank_transpose(),
        law_rational_rank_invariance(),
        law_theta_weight_symmetry(),
        law_theta_weight_conjugation(),
        law_conjugation_tensor_multiplicative(),
        law_conjugation_trace(),
        law_structure_form_invariance(),
        law_edge_pairing_invariance(),
        law_difference_class_well_defined(),
        law_embedding_symmetry(),
        law_embedding_independence(),
        law_decorated_weight_well_defined(),
        law_standard_family_extremal(),
        law_representation_exactness(),
        law_character_reality(),
        law_symmetric_power_multiplicative(),
        law_word_evaluation(),
        law_cochain_complex(),
        law_finite_image_semisimplicity(),
        law_fixed_space_dimension(),
        law_character_decomposition(),
        law_surgery_conjugation_invariance(),
        law_surgery_shift_invariance(),
        law_cover_linearity(),
        law_surgery_edge_permutation(),
        law_serialization_round_trip(),
        law_reproduction_cases(),
        law_reproduction_determinism(),
    };
}

}  // namespace laws
