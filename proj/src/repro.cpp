#include "thetainv/repro.hpp"

#include "thetainv/surgery.hpp"
#include "thetainv/theta_spaces.hpp"
#include "thetainv/twisted_homology.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace thetainv {

namespace {

/* accumulates labeled expected/computed pairs for one case */
struct Parts {
    std::vector<std::string> exp, got;

    void value(const std::string& label, const std::string& expect, const std::string& actual) {
        exp.push_back(label + " = " + expect);
        got.push_back(label + " = " + actual);
    }
    void check(const std::string& label, bool pass, const std::string& detail = "") {
        exp.push_back(label + ": holds");
        got.push_back(label + (pass ? ": holds" : ": FAILS" + (detail.empty() ? "" : " (" + detail + ")")));
    }
    static std::string joined(const std::vector<std::string>& v) {
        std::string out;
        for (const auto& s : v) {
            if (!out.empty()) out += "; ";
            out += s;
        }
        return out;
    }
};

SurgerySpec plain_spec(int parity, long p) {
    SurgerySpec s;
    s.parity = parity;
    s.edges = {EdgeDecoration{"1", 0}, EdgeDecoration{"1", 1}, EdgeDecoration{"1", p}};
    return s;
}

void case_example_235(Parts& P) {
    TensorSq c = casimir();
    P.value("theta_weight(c,c,c)", Scalar(12).str(), theta_weight(c, c, c).str());

    Rep rho = rho_235(1);
    SU2Matrix a3(rho.eval("x3"));
    SU2Matrix a3_2 = a3 * a3;
    SU2Matrix a3_3 = a3_2 * a3;
    Scalar golden_plus(Rational(1, 2), 0, Rational(1, 2), 0);
    Scalar golden_minus(Rational(1, 2), 0, Rational(-1, 2), 0);
    P.value("w(x3)", golden_plus.str(), circle_weight(a3).str());
    P.value("w(x3^2)", golden_minus.str(), circle_weight(a3_2).str());
    P.value("w(x3^3)", golden_minus.str(), circle_weight(a3_3).str());
    P.value("theta_weight(c, Ad x3, Ad x3^2)", Scalar(Rational(-3), 0, Rational(1), 0).str(),
            theta_weight(c, ad_of(a3), ad_of(a3_2)).str());
}

void case_prop_1ttp(Parts& P) {
    bool tables_match = true;
    long bad_p = 0;
    for (long p = 3; p <= 12; ++p) {
        if (embed_class(w_scalar(0, 0, 1, p)).image() != f_poly(p)) {
            tables_match = false;
            bad_p = p;
            break;
        }
    }
    P.check("embedded class of (0,1,p) equals the twelve-term table, p = 3..12", tables_match,
            tables_match ? "" : "first failure at p = " + std::to_string(bad_p));

    bool degrees_match = true;
    for (long p = 3; p <= 12 && degrees_match; ++p) {
        LaurentPoly one_var = f_poly(p).substitute3(0, 1, 3);
        degrees_match = one_var.max_degree() == 3 * p - 1 && one_var.min_degree() == -(3 * p - 1);
    }
    P.check("extremal exponents of the (0,1,3) substitution are +-(3p-1), p = 3..12", degrees_match);

    std::vector<TriLaurent> family0;
    for (long p = 3; p <= 20; ++p) family0.push_back(f_poly(p));
    P.value("rank over Q of { f_p : 3 <= p <= 20 }", "18", std::to_string(rank_over_Q(family0)));

    std::vector<TriLaurent> family1;
    for (long p = 1; p <= 15; ++p) family1.push_back(embed_class(w_scalar(1, 0, 1, p)).image());
    P.value("rank over Q of the symmetric family, p = 1..15", "15",
            std::to_string(rank_over_Q(family1)));
}

void case_prop_w_ad(Parts& P) {
    Rep rho = rho_235(1);
    std::vector<SU2Matrix> image = enumerate_image(rho);
    P.value("image size", "120", std::to_string(image.size()));

    TensorSq c = casimir();
    std::vector<TensorSq> ads;
    std::vector<Scalar> chars;
    ads.reserve(image.size());
    chars.reserve(image.size());
    for (const SU2Matrix& g : image) {
        ads.push_back(ad_of(g));
        chars.push_back(circle_weight(g));
    }
    size_t pass = 0, total = image.size() * image.size();
    for (size_t a = 0; a < image.size(); ++a) {
        for (size_t b = 0; b < image.size(); ++b) {
            Scalar lhs = theta_weight(c, ads[a], ads[b]);
            Scalar rhs = chars[a] * chars[b] - circle_weight(image[a] * image[b]);
            rhs.scale_int(2);
            if (lhs == rhs) ++pass;
        }
    }
    P.value("pairs satisfying w(c, Ad x, Ad y) = 2(tr Ad x tr Ad y - tr Ad xy)",
            std::to_string(total) + "/" + std::to_string(total),
            std::to_string(pass) + "/" + std::to_string(total));
}

void case_acyclicity(Parts& P) {
    GroupPresentation pres = presentation_235();
    for (int v = 1; v <= 2; ++v) {
        auto [h0, h1] = cohomology_dims(pres, compose_ad(rho_235(v)));
        P.value("(h0, h1) with conjugation coefficients, variant v" + std::to_string(v), "(0, 0)",
                "(" + std::to_string(h0) + ", " + std::to_string(h1) + ")");
    }
}

void case_v4_invariants(Parts& P) {
    for (int v = 1; v <= 2; ++v) {
        int dim = invariants_dim(compose_sym(rho_235(v), 4));
        P.value("dim of the common fixed space in degree 4, variant v" + std::to_string(v), "0",
                std::to_string(dim));
    }
}

void case_decomposition(Parts& P) {
    for (int v = 1; v <= 2; ++v)
        P.check("squared conjugation character = 1 + sym^2 + sym^4 on all 120 elements, variant v" +
                    std::to_string(v),
                decomposition_check(rho_235(v)));
}

void case_surgery_theta(Parts& P) {
    bool plain_ok = true;
    for (long p = 3; p <= 8 && plain_ok; ++p)
        plain_ok = z_theta_surgery(plain_spec(0, p)).image.image() == f_poly(p) * Scalar(24);
    P.check("Z_theta of (1, t, t^p) equals 24 f_p, p = 3..8", plain_ok);

    Scalar twisted_factor(Rational(-6), 0, Rational(2), 0);  // 2(-3+sqrt5)
    bool twisted_ok = true;
    for (long p = 3; p <= 8 && twisted_ok; ++p) {
        SurgerySpec s;
        s.parity = 0;
        s.edges = {EdgeDecoration{"1", 0}, EdgeDecoration{"x3", 1}, EdgeDecoration{"x3 x3", p}};
        twisted_ok = z_theta_surgery(s).image.image() == f_poly(p) * twisted_factor;
    }
    P.check("Z_theta of (1, x3 t, x3^2 t^p) equals 2(-3+sqrt5) f_p, p = 3..8", twisted_ok);

    SurgerySpec tw;
    tw.parity = 0;
    tw.edges = {EdgeDecoration{"1", 0}, EdgeDecoration{"x3", 1}, EdgeDecoration{"x3 x3", 5}};
    std::vector<TriLaurent> pair = {z_theta_surgery(plain_spec(0, 5)).image.image(),
                                    z_theta_surgery(tw).image.image()};
    P.value("rank over Q of the pair at p = 5", "2", std::to_string(rank_over_Q(pair)));
}

void case_cyclic_lift(Parts& P) {
    struct Probe {
        const char* g;
        const char* h;
        long p, q;
    };
    for (const Probe& probe : {Probe{"1", "1", 1, 5}, Probe{"x3", "x3 x3", 1, 5}}) {
        SThetaElt base = cyclic_lift_value(probe.g, probe.h, probe.p, probe.q, 1);
        bool linear = true;
        for (long r = 1; r <= 6 && linear; ++r)
            linear = cyclic_lift_value(probe.g, probe.h, probe.p, probe.q, r) == base * Scalar(r);
        P.check("lift value is r times the r = 1 value for r = 1..6, words (" +
                    std::string(probe.g) + ", " + probe.h + ")",
                linear);
    }
}

void case_coker_independence(Parts& P) {
    for (int eps = 0; eps <= 1; ++eps) {
        long p_start = eps == 0 ? 3 : 1;
        std::vector<SurgerySpec> specs;
        for (long p = p_start; p < p_start + 10; ++p) specs.push_back(plain_spec(eps, p));
        Certificate cert = independence_certificate(specs);
        P.value("rank-coker, eps = " + std::to_string(eps) + ", p = " + std::to_string(p_start) +
                    ".." + std::to_string(p_start + 9),
                "10", std::to_string(cert.rank_coker));
        P.value("rank-full, eps = " + std::to_string(eps), "10", std::to_string(cert.rank_full));
        P.value("conclusion, eps = " + std::to_string(eps), "independent-in-cokernel",
                cert.conclusion);
    }
}

struct CaseDef {
    const char* name;
    const char* source;
    void (*run)(Parts&);
};

const CaseDef kCases[] = {
    {"example-235", "worked example: Poincare-sphere weights", case_example_235},
    {"prop-1ttp", "stated closed form and ranks of the f_p family", case_prop_1ttp},
    {"prop-w-ad", "trace identity for conjugation decorations", case_prop_w_ad},
    {"acyclicity-adjoint", "stated twisted-cohomology vanishing", case_acyclicity},
    {"v4-invariants", "stated fixed-space vanishing in degree 4", case_v4_invariants},
    {"decomposition", "character decomposition of the tensor square", case_decomposition},
    {"surgery-theta", "surgery-formula values for the two standard decorations", case_surgery_theta},
    {"cyclic-lift", "cover-multiplicativity rule", case_cyclic_lift},
    {"coker-independence", "independence in the cokernel of the group-like part",
     case_coker_independence},
};

}  // namespace

const std::vector<std::string>& repro_case_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const CaseDef& c : kCases) v.emplace_back(c.name);
        return v;
    }();
    return names;
}

ReproReport run_repro(const std::string& case_name) {
    for (const CaseDef& def : kCases) {
        if (case_name != def.name) continue;
        Parts parts;
        auto start = std::chrono::steady_clock::now();
        def.run(parts);
        auto stop = std::chrono::steady_clock::now();
        ReproReport r;
        r.case_name = def.name;
        r.source = def.source;
        r.expected = Parts::joined(parts.exp);
        r.computed = Parts::joined(parts.got);
        r.match = r.expected == r.computed;
        r.runtime_seconds = std::chrono::duration<double>(stop - start).count();
        return r;
    }
    throw std::invalid_argument("unknown repro case '" + case_name + "'");
}

std::vector<ReproReport> run_all_repro() {
    std::vector<ReproReport> out;
    for (const std::string& name : repro_case_names()) out.push_back(run_repro(name));
    return out;
}

io::json report_to_json(const ReproReport& r) {
    io::json j = io::json::object();
    j["case"] = r.case_name;
    j["source"] = r.source;
    j["expected"] = r.expected;
    j["computed"] = r.computed;
    j["match"] = r.match;
    return j;
}

ReproReport report_from_json(const io::json& j, const std::string& where) {
    ReproReport r;
    auto field = [&](const char* key) -> std::string {
        if (!j.is_object() || !j.contains(key))
            throw io::schema_error(where, std::string("missing key '") + key + "'");
        if (!j[key].is_string()) throw io::schema_error(where + "/" + key, "expected a string");
        return j[key].get<std::string>();
    };
    r.case_name = field("case");
    r.source = field("source");
    r.expected = field("expected");
    r.computed = field("computed");
    if (!j.contains("match") || !j["match"].is_boolean())
        throw io::schema_error(where + "/match", "expected a boolean");
    r.match = j["match"].get<bool>();
    return r;
}

}  // namespace thetainv
