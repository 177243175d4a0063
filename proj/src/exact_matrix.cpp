#include "thetainv/exact_matrix.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace thetainv {

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
    return m;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
    return r;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    ExactMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

ExactMatrix ExactMatrix::operator*(const Scalar& c) const {
    ExactMatrix r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * c;
    return r;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

ExactMatrix ExactMatrix::conj() const {
    ExactMatrix r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k].conj();
    return r;
}

Scalar ExactMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    Scalar t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool ExactMatrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_);
}

int ExactMatrix::rank() const {
    ExactMatrix w(*this);
    int rank = 0;
    for (int col = 0; col < w.cols_ && rank < w.rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < w.rows_; ++r) {
            if (!w.at(r, col).is_zero()) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = col; j < w.cols_; ++j) std::swap(w.at(pivot, j), w.at(rank, j));
        Scalar inv = w.at(rank, col).inverse();
        for (int r = rank + 1; r < w.rows_; ++r) {
            if (w.at(r, col).is_zero()) continue;
            Scalar factor = w.at(r, col) * inv;
            w.at(r, col) = Scalar();
            for (int j = col + 1; j < w.cols_; ++j) {
                if (w.at(rank, j).is_zero()) continue;
                w.at(r, j) -= factor * w.at(rank, j);
            }
        }
        ++rank;
    }
    return rank;
}

std::optional<ExactMatrix> ExactMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    ExactMatrix w(*this);
    ExactMatrix inv = identity(rows_);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int r = col; r < rows_; ++r) {
            if (!w.at(r, col).is_zero()) { pivot = r; break; }
        }
        if (pivot < 0) return std::nullopt;
        if (pivot != col)
            for (int j = 0; j < cols_; ++j) {
                std::swap(w.at(pivot, j), w.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Scalar pinv = w.at(col, col).inverse();
        for (int j = 0; j < cols_; ++j) {
            w.at(col, j) *= pinv;
            inv.at(col, j) *= pinv;
        }
        for (int r = 0; r < rows_; ++r) {
            if (r == col || w.at(r, col).is_zero()) continue;
            Scalar factor = w.at(r, col);
            for (int j = 0; j < cols_; ++j) {
                w.at(r, j) -= factor * w.at(col, j);
                inv.at(r, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

ExactMatrix ExactMatrix::vstack(const std::vector<ExactMatrix>& blocks) {
    if (blocks.empty()) return ExactMatrix();
    int cols = blocks.front().cols_;
    int rows = 0;
    for (const auto& b : blocks) {
        if (b.cols_ != cols) throw std::invalid_argument("vstack column mismatch");
        rows += b.rows_;
    }
    ExactMatrix r(rows, cols);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < cols; ++j) r.at(off + i, j) = b.at(i, j);
        off += b.rows_;
    }
    return r;
}

int ExactMatrix::cmp(const ExactMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_ ? -1 : 1;
    if (cols_ != o.cols_) return cols_ < o.cols_ ? -1 : 1;
    for (size_t k = 0; k < data_.size(); ++k) {
        int c = data_[k].cmp(o.data_[k]);
        if (c != 0) return c;
    }
    return 0;
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? " [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    os << "]";
    return os.str();
}

int exact_rank(const ExactMatrix& m) { return m.rank(); }

int rank_over_Q(const std::vector<TriLaurent>& family) {
    std::set<TriLaurent::Key> keys;
    for (const auto& f : family)
        for (const auto& [e, c] : f.terms()) keys.insert(e);
    ExactMatrix m(static_cast<int>(family.size()), static_cast<int>(keys.size()) * 4);
    int row = 0;
    for (const auto& f : family) {
        int col = 0;
        for (const auto& key : keys) {
            Scalar c = f.coeff(key);
            for (int k = 0; k < 4; ++k) m.at(row, col + k) = Scalar(c.coord(k));
            col += 4;
        }
        ++row;
    }
    return m.rank();
}

}  // namespace thetainv
