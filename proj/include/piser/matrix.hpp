#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "piser/rational.hpp"

namespace piser {

/// Dense exact matrix with row/column labels and a tag recording which
/// structured family the instance was built from ("A", "M", "MX", "MZ", ...).
class MatrixQ {
public:
    MatrixQ() = default;
    MatrixQ(int rows, int cols, std::string kind = {})
        : rows_(rows), cols_(cols), kind_(std::move(kind)),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::string& kind() const { return kind_; }

    Rational& at(int i, int j) {
        return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(j)];
    }
    const Rational& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(j)];
    }

    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

    friend bool operator==(const MatrixQ& a, const MatrixQ& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::string kind_;
    std::vector<Rational> a_;
};

struct SingularSystemError : std::runtime_error {
    int rank;
    explicit SingularSystemError(int r)
        : std::runtime_error("singular system (rank " + std::to_string(r) + ")"), rank(r) {}
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Rational det_structured(const MatrixQ& m);

/// Exact solution of a square system by fraction-free elimination.
/// Throws SingularSystemError (carrying the rank found) when singular.
std::vector<Rational> solve_exact(const MatrixQ& m, const std::vector<Rational>& rhs);

}  // namespace piser
