#pragma once

#include "thetainv/group_rep.hpp"
#include "thetainv/theta_spaces.hpp"

#include <array>
#include <string>
#include <vector>

namespace thetainv {

struct RepSelector {
    int variant = 1;       // which sqrt5-embedding
    bool extended = false; // adjoin the central generator t -> -I
};

struct EdgeDecoration {
    std::string word;  // group word in the presentation's generators
    long t_exp = 0;    // Laurent exponent carried by the edge
};

struct SurgerySpec {
    int parity = 0;
    std::array<EdgeDecoration, 3> edges;
    RepSelector rep;
};

/*
 * Value of the invariant under the surgery formula for a two-loop graph whose
 * edges are decorated by group words and Laurent exponents: twice the
 * weight-system image of the graph decorated by conjugation tensors.  The
 * evaluation assumes the obstruction space of the complement vanishes; that
 * standing hypothesis is recorded in the report rather than computed.
 */
struct SurgeryValue {
    std::string description;  // human-readable decorated-graph label
    SThetaElt image;

    SurgeryValue() : image(0) {}
};

SurgeryValue z_theta_surgery(const SurgerySpec& spec);

/*
 * Value contributed by an r-fold cyclic cover block: 2r times the image of
 * the graph with one plain edge and two decorated edges (parity 0).
 */
SThetaElt cyclic_lift_value(const std::string& g, const std::string& h, long p, long q, long r,
                            const RepSelector& sel = {});

struct Certificate {
    std::vector<SurgerySpec> inputs;
    std::vector<SThetaElt> images;
    int rank_full = 0;
    int rank_coker = 0;
    std::string conclusion;
};

/* exact rank certificate for a family of surgery values; all specs must share
   a parity */
Certificate independence_certificate(const std::vector<SurgerySpec>& specs);

}  // namespace thetainv
