#include "thetainv/twisted_homology.hpp"

namespace thetainv {

void GroupRingElt::add(const Scalar& c, const Word& w) {
    if (c.is_zero()) return;
    for (auto it = terms.begin(); it != terms.end(); ++it) {
        if (it->second == w) {
            it->first += c;
            if (it->first.is_zero()) terms.erase(it);
            return;
        }
    }
    terms.emplace_back(c, w);
}

GroupRingElt fox_derivative(const Word& w, int gen) {
    GroupRingElt out;
    Word prefix;
    for (const auto& [g, s] : w.letters()) {
        if (g == gen) {
            if (s > 0) {
                out.add(Scalar::one(), prefix);
            } else {
                Word p = prefix;
                p.append(g, -1);
                out.add(-Scalar::one(), p);
            }
        }
        prefix.append(g, s);
    }
    return out;
}

ExactMatrix eval_group_ring(const Rep& rho, const GroupRingElt& e) {
    ExactMatrix acc(rho.dim(), rho.dim());
    for (const auto& [c, w] : e.terms) acc += rho.eval(w) * c;
    return acc;
}

CochainMaps cochain_maps(const GroupPresentation& pres, const Rep& rho) {
    if (pres.gens.size() != rho.presentation().gens.size())
        throw std::invalid_argument("presentation does not match the representation");
    int n = static_cast<int>(pres.gens.size());
    int m = static_cast<int>(pres.relators.size());
    int d = rho.dim();
    ExactMatrix id = ExactMatrix::identity(d);

    CochainMaps maps;
    maps.d0 = ExactMatrix(n * d, d);
    for (int i = 0; i < n; ++i) {
        ExactMatrix block = rho.image(i) - id;
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) maps.d0.at(i * d + r, c) = block.at(r, c);
    }

    maps.d1 = ExactMatrix(m * d, n * d);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) {
            ExactMatrix block = eval_group_ring(rho, fox_derivative(pres.relators[static_cast<size_t>(j)], i));
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) maps.d1.at(j * d + r, i * d + c) = block.at(r, c);
        }
    return maps;
}

std::pair<int, int> cohomology_dims(const CochainMaps& maps) {
    int rank0 = maps.d0.rank();
    int h0 = maps.d0.cols() - rank0;
    int h1 = maps.d1.nullity() - rank0;
    return {h0, h1};
}

std::pair<int, int> cohomology_dims(const GroupPresentation& pres, const Rep& rho) {
    return cohomology_dims(cochain_maps(pres, rho));
}

int invariants_dim(const Rep& rho) {
    int n = static_cast<int>(rho.presentation().gens.size());
    int d = rho.dim();
    ExactMatrix id = ExactMatrix::identity(d);
    std::vector<ExactMatrix> blocks;
    blocks.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) blocks.push_back(rho.image(i) - id);
    return ExactMatrix::vstack(blocks).nullity();
}

bool decomposition_check(const Rep& rho, size_t cap) {
    auto image = enumerate_image(rho, cap);
    for (const auto& g : image) {
        Scalar chi_conj = endo_trace(ad_of(g));
        Scalar lhs = chi_conj * chi_conj;
        Scalar rhs = Scalar::one() + sym_power(g, 2).trace() + sym_power(g, 4).trace();
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace thetainv
