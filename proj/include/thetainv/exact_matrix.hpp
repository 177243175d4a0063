#pragma once

#include "thetainv/laurent.hpp"
#include "thetainv/scalar.hpp"

#include <optional>
#include <vector>

namespace thetainv {

/* Dense matrix over Scalar with exact elimination. */
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}
    static ExactMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int i, int j) { return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }
    const Scalar& at(int i, int j) const { return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }

    ExactMatrix operator-() const;
    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { a += b; return a; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { a -= b; return a; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    ExactMatrix operator*(const Scalar& c) const;

    ExactMatrix transpose() const;
    ExactMatrix conj() const;  // entrywise i -> -i
    Scalar trace() const;
    bool is_zero() const;
    bool is_identity() const;

    /* exact Gaussian elimination over Q(i, sqrt5); pivot rule is the first
       nonzero entry scanning rows top-down within each column, so the result
       is deterministic */
    int rank() const;
    int nullity() const { return cols_ - rank(); }
    std::optional<ExactMatrix> inverse() const;

    /* stack blocks vertically; all blocks must share a column count */
    static ExactMatrix vstack(const std::vector<ExactMatrix>& blocks);

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }
    /* total order for use as container key */
    int cmp(const ExactMatrix& o) const;

    std::string str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> data_;
};

int exact_rank(const ExactMatrix& m);

/*
 * Rank over Q of a family of three-variable Laurent polynomials: each
 * monomial contributes four rational coordinates (one per field basis
 * element), and the rank is computed exactly over the rationals.
 */
int rank_over_Q(const std::vector<TriLaurent>& family);

}  // namespace thetainv
