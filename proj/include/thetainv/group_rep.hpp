#pragma once

#include "thetainv/exact_matrix.hpp"
#include "thetainv/sl2.hpp"

#include <string>
#include <utility>
#include <vector>

namespace thetainv {

struct image_cap_exceeded : std::runtime_error {
    image_cap_exceeded() : std::runtime_error("image enumeration exceeded cap") {}
};

/* Freely reduced word in the generators of a presentation. */
class Word {
public:
    Word() = default;
    static Word letter(int gen, int sign);
    /* parse "x1 x2^ h" style text: whitespace-separated generator names, a
       trailing '^' marking an inverse; "1" or "" is the empty word */
    static Word parse(const std::string& text, const std::vector<std::string>& gens);

    const std::vector<std::pair<int, int>>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    void append(int gen, int sign);  // reducing push
    friend Word operator*(const Word& a, const Word& b);
    Word inverse() const;
    static Word power(const Word& w, int k);
    static Word commutator(const Word& a, const Word& b);  // a b a^{-1} b^{-1}

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& gens) const;

private:
    std::vector<std::pair<int, int>> letters_;  // (generator index, +-1)
};

struct GroupPresentation {
    std::vector<std::string> gens;
    std::vector<Word> relators;

    int gen_index(const std::string& name) const;  // -1 when absent
};

/* central extension of the (2,3,5) triangle group: generators x1, x2, x3, h
   with h central, x1^2 = h, x2^3 = h^{-1}, x3^5 = h^{-1}, x1 x2 x3 = 1 */
GroupPresentation presentation_235();

/*
 * Matrix representation of a presented group: one invertible matrix per
 * generator.  Construction verifies every relator maps to the identity and
 * throws std::invalid_argument otherwise.
 */
class Rep {
public:
    Rep(GroupPresentation pres, std::vector<ExactMatrix> images);

    const GroupPresentation& presentation() const { return pres_; }
    int dim() const { return dim_; }
    const ExactMatrix& image(int gen) const { return images_[static_cast<size_t>(gen)]; }
    const ExactMatrix& image_inverse(int gen) const { return inverses_[static_cast<size_t>(gen)]; }

    ExactMatrix eval(const Word& w) const;
    ExactMatrix eval(const std::string& word_text) const;

private:
    GroupPresentation pres_;
    std::vector<ExactMatrix> images_;
    std::vector<ExactMatrix> inverses_;
    int dim_;
};

/* evaluate each relator against candidate generator images */
std::vector<bool> verify_relations(const GroupPresentation& pres,
                                   const std::vector<ExactMatrix>& images);

/*
 * The two exact special-unitary representations of the (2,3,5) group over
 * Q(i, sqrt5), indexed by the choice of sqrt5-embedding:
 *   variant 1: alpha = (1+sqrt5)/4, beta = (-1+sqrt5)/4
 *   variant 2: alpha = (1-sqrt5)/4, beta = (1+sqrt5)/4
 */
Rep rho_235(int variant);

/* extend over an added central generator t mapping to -I */
Rep rho1_extension(const Rep& rho);

/* breadth-first closure of the generator images under multiplication;
   deterministic FIFO order; throws image_cap_exceeded beyond cap */
std::vector<SU2Matrix> enumerate_image(const Rep& rho, size_t cap = 1000);

/* squared trace modulus minus one: the trace of conjugation on the algebra */
Scalar circle_weight(const SU2Matrix& g);

/* action on homogeneous polynomials of degree m in two variables,
   (g.f)(v) = f(g^{-1} v), in the monomial basis x^m, x^{m-1}y, ..., y^m */
ExactMatrix sym_power(const SU2Matrix& g, int m);

/* functorial composites, re-verified on construction */
Rep compose_ad(const Rep& rho);
Rep compose_sym(const Rep& rho, int m);
Rep trivial_rep(const GroupPresentation& pres, int dim = 1);

}  // namespace thetainv
