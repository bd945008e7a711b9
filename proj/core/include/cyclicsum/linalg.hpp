#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclicsum/poly.hpp"
#include "cyclicsum/word.hpp"

namespace csf {

/// Exact sparse matrix over Q. Columns may be labelled by words, in which case the
/// labels are distinct and in canonical word order.
class RationalMatrix {
public:
    using Entry = std::pair<std::size_t, Rational>;
    using Row = std::vector<Entry>; // strictly increasing column, nonzero values

    RationalMatrix() = default;
    /// Throws std::invalid_argument on out-of-range, unsorted or zero entries, or bad labels.
    RationalMatrix(std::size_t cols, std::vector<Row> rows, std::vector<Word> column_labels = {});

    static RationalMatrix from_dense(const std::vector<std::vector<Rational>>& dense);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    const Row& row(std::size_t i) const { return rows_.at(i); }
    const std::vector<Word>& column_labels() const noexcept { return labels_; }
    Rational at(std::size_t i, std::size_t j) const;

    /// Tab-separated dump; the header row holds the column words when labelled.
    std::string to_tsv() const;

private:
    std::size_t cols_ = 0;
    std::vector<Row> rows_;
    std::vector<Word> labels_;
};

/// One row per polynomial over the union of their supports (canonical word order).
/// Throws std::invalid_argument unless all nonzero inputs are homogeneous of one degree.
RationalMatrix matrix_from_polys(std::span<const Poly> ps);

/// Exact rank by sparse fraction-based elimination on a private copy.
std::size_t rank(const RationalMatrix& m);

/// Dimension of the Q-span of ps.
std::size_t dim_span(std::span<const Poly> ps);

/// span(sub) is contained in span(sup), decided by rank(sup) == rank(sub ∪ sup).
bool spans_include(std::span<const Poly> sub, std::span<const Poly> sup);

} // namespace csf
