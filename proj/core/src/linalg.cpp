#include "cyclicsum/linalg.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace csf {

RationalMatrix::RationalMatrix(std::size_t cols, std::vector<Row> rows, std::vector<Word> column_labels)
    : cols_(cols), rows_(std::move(rows)), labels_(std::move(column_labels)) {
    if (!labels_.empty()) {
        if (labels_.size() != cols_) throw std::invalid_argument("matrix: label count differs from column count");
        for (std::size_t j = 1; j < labels_.size(); ++j)
            if (!(labels_[j - 1] < labels_[j]))
                throw std::invalid_argument("matrix: column labels must be distinct and in canonical order");
    }
    for (const auto& r : rows_) {
        for (std::size_t e = 0; e < r.size(); ++e) {
            if (r[e].first >= cols_) throw std::invalid_argument("matrix: column index out of range");
            if (e > 0 && r[e - 1].first >= r[e].first) throw std::invalid_argument("matrix: row entries unsorted");
            if (sgn(r[e].second) == 0) throw std::invalid_argument("matrix: explicit zero entry");
        }
    }
}

RationalMatrix RationalMatrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
    std::size_t cols = dense.empty() ? 0 : dense.front().size();
    std::vector<Row> rows;
    for (const auto& d : dense) {
        if (d.size() != cols) throw std::invalid_argument("matrix: ragged dense input");
        Row r;
        for (std::size_t j = 0; j < d.size(); ++j)
            if (sgn(d[j]) != 0) r.emplace_back(j, d[j]);
        rows.push_back(std::move(r));
    }
    return RationalMatrix(cols, std::move(rows));
}

Rational RationalMatrix::at(std::size_t i, std::size_t j) const {
    const Row& r = rows_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
    return (it != r.end() && it->first == j) ? it->second : Rational(0);
}

std::string RationalMatrix::to_tsv() const {
    std::string out;
    if (!labels_.empty()) {
        for (std::size_t j = 0; j < labels_.size(); ++j) {
            if (j) out += '\t';
            out += labels_[j].empty() ? "1" : labels_[j].to_string();
        }
        out += '\n';
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out += '\t';
            out += at(i, j).get_str();
        }
        out += '\n';
    }
    return out;
}

RationalMatrix matrix_from_polys(std::span<const Poly> ps) {
    std::optional<std::size_t> degree;
    std::map<Word, std::size_t> column_of;
    for (const auto& p : ps) {
        if (p.is_zero()) continue;
        auto d = p.degree();
        if (!d || (degree && *d != *degree))
            throw std::invalid_argument("matrix_from_polys: polynomials are not homogeneous of one degree");
        degree = d;
        for (const auto& [w, c] : p) column_of.emplace(w, 0);
    }
    std::vector<Word> labels;
    labels.reserve(column_of.size());
    for (auto& [w, idx] : column_of) {
        idx = labels.size();
        labels.push_back(w);
    }
    std::vector<RationalMatrix::Row> rows;
    rows.reserve(ps.size());
    for (const auto& p : ps) {
        RationalMatrix::Row r;
        r.reserve(p.size());
        for (const auto& [w, c] : p) r.emplace_back(column_of.at(w), c);
        rows.push_back(std::move(r));
    }
    const std::size_t cols = labels.size();
    return RationalMatrix(cols, std::move(rows), std::move(labels));
}

namespace {

std::size_t bit_length(const Rational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

struct PivotRow {
    std::size_t column;
    RationalMatrix::Row entries; // coefficient 1 at `column`
};

} // namespace

std::size_t rank(const RationalMatrix& m) {
    // Each incoming row is reduced against the pivots in insertion order. A pivot
    // row was itself reduced against all earlier pivots, so subtracting it can only
    // touch columns of later pivots; one ordered pass leaves no pivot column set.
    std::vector<PivotRow> pivots;
    std::vector<Rational> work(m.cols());
    std::vector<char> touched(m.cols(), 0);
    std::vector<std::size_t> touched_cols;

    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (pivots.size() == m.cols()) break;
        touched_cols.clear();
        for (const auto& [c, v] : m.row(i)) {
            work[c] = v;
            touched[c] = 1;
            touched_cols.push_back(c);
        }
        for (const auto& p : pivots) {
            if (sgn(work[p.column]) == 0) continue;
            const Rational factor = work[p.column];
            for (const auto& [c, v] : p.entries) {
                if (!touched[c]) {
                    touched[c] = 1;
                    touched_cols.push_back(c);
                }
                work[c] -= factor * v;
            }
        }
        // Gather the residue and choose the entry with the shortest numerator/denominator as pivot.
        RationalMatrix::Row residue;
        std::sort(touched_cols.begin(), touched_cols.end());
        std::optional<std::size_t> best;
        std::size_t best_len = 0;
        for (std::size_t c : touched_cols) {
            if (sgn(work[c]) != 0) {
                std::size_t len = bit_length(work[c]);
                if (!best || len < best_len) {
                    best = residue.size();
                    best_len = len;
                }
                residue.emplace_back(c, work[c]);
            }
            work[c] = 0;
            touched[c] = 0;
        }
        if (!best) continue;
        const Rational scale = 1 / residue[*best].second;
        for (auto& [c, v] : residue) v *= scale;
        pivots.push_back(PivotRow{residue[*best].first, std::move(residue)});
    }
    return pivots.size();
}

std::size_t dim_span(std::span<const Poly> ps) { return rank(matrix_from_polys(ps)); }

bool spans_include(std::span<const Poly> sub, std::span<const Poly> sup) {
    std::vector<Poly> both(sup.begin(), sup.end());
    both.insert(both.end(), sub.begin(), sub.end());
    return dim_span(sup) == dim_span(both);
}

} // namespace csf
