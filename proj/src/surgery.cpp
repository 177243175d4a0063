#include "thetainv/surgery.hpp"

#include <sstream>
#include <stdexcept>

namespace thetainv {

namespace {
Rep build_rep(const RepSelector& sel) {
    Rep rho = rho_235(sel.variant);
    if (sel.extended) return rho1_extension(rho);
    return rho;
}
}  // namespace

SurgeryValue z_theta_surgery(const SurgerySpec& spec) {
    if (spec.parity != 0 && spec.parity != 1) throw std::invalid_argument("parity must be 0 or 1");
    Rep rho = build_rep(spec.rep);

    DecoratedTheta dec;
    dec.parity = spec.parity;
    std::ostringstream desc;
    desc << "2·Θ(";
    for (int k = 0; k < 3; ++k) {
        const auto& edge = spec.edges[static_cast<size_t>(k)];
        SU2Matrix g(rho.eval(edge.word));
        dec.edges[static_cast<size_t>(k)] = TensorSqLaurent::monomial(edge.t_exp, ad_of(g));
        if (k) desc << ", ";
        desc << "Adρ(" << (edge.word.empty() ? "1" : edge.word) << ")t^" << edge.t_exp;
    }
    desc << ")";

    SurgeryValue out;
    out.description = desc.str();
    out.image = w_lie(dec) * Scalar(2);
    return out;
}

SThetaElt cyclic_lift_value(const std::string& g, const std::string& h, long p, long q, long r,
                            const RepSelector& sel) {
    if (r <= 0) throw std::invalid_argument("cover degree must be positive");
    SurgerySpec spec;
    spec.parity = 0;
    spec.edges = {EdgeDecoration{"1", 0}, EdgeDecoration{g, p}, EdgeDecoration{h, q}};
    spec.rep = sel;
    return z_theta_surgery(spec).image * Scalar(r);
}

Certificate independence_certificate(const std::vector<SurgerySpec>& specs) {
    Certificate cert;
    cert.inputs = specs;
    if (specs.empty()) {
        cert.conclusion = "empty-family";
        return cert;
    }
    int parity = specs.front().parity;
    std::vector<TriLaurent> full, coker;
    for (const auto& s : specs) {
        if (s.parity != parity) throw std::invalid_argument("mixed parities in one certificate");
        SThetaElt img = z_theta_surgery(s).image;
        full.push_back(img.image());
        coker.push_back(coker_project(img).image());
        cert.images.push_back(std::move(img));
    }
    cert.rank_full = rank_over_Q(full);
    cert.rank_coker = rank_over_Q(coker);
    cert.conclusion = cert.rank_coker == static_cast<int>(specs.size())
                          ? "independent-in-cokernel"
                          : "not-independent-in-cokernel";
    return cert;
}

}  // namespace thetainv
