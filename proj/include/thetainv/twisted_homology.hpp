#pragma once

#include "thetainv/group_rep.hpp"

#include <utility>
#include <vector>

namespace thetainv {

/* Formal Scalar-linear combination of reduced words. */
struct GroupRingElt {
    std::vector<std::pair<Scalar, Word>> terms;  // like terms merged, zeros dropped

    void add(const Scalar& c, const Word& w);
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const GroupRingElt& a, const GroupRingElt& b) {
        return a.terms == b.terms;
    }
};

/*
 * Free-differential derivative of a word with respect to one generator:
 *   d(1) = 0, d(x)/dx = 1, d(x^{-1})/dx = -x^{-1}, d(uv)/dx = du/dx + u dv/dx.
 */
GroupRingElt fox_derivative(const Word& w, int gen);

/* apply a representation linearly to a group-ring element */
ExactMatrix eval_group_ring(const Rep& rho, const GroupRingElt& e);

/*
 * Cochain maps of the presentation 2-complex with coefficients twisted by
 * rho (dimension d, n generators, m relators):
 *   d0: (n*d) x d, stacked blocks rho(g_i) - I
 *   d1: (m*d) x (n*d), block (j,i) = rho(d r_j / d g_i)
 * Always satisfies d1 * d0 = 0.
 */
struct CochainMaps {
    ExactMatrix d0, d1;
};

CochainMaps cochain_maps(const GroupPresentation& pres, const Rep& rho);

/* (h0, h1) = (nullity d0, nullity d1 - rank d0) */
std::pair<int, int> cohomology_dims(const CochainMaps& maps);
std::pair<int, int> cohomology_dims(const GroupPresentation& pres, const Rep& rho);

/* dimension of the simultaneous fixed space of all generator images */
int invariants_dim(const Rep& rho);

/*
 * Character identity for the tensor square of the conjugation action: for
 * every element g of the enumerated image, the squared trace of conjugation
 * equals 1 + tr(sym^2 at g) + tr(sym^4 at g).
 */
bool decomposition_check(const Rep& rho, size_t cap = 1000);

}  // namespace thetainv
