#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "cyclicsum/linalg.hpp"
#include "cyclicsum/operators.hpp"
#include "oracles.hpp"

using namespace csf;

namespace {

Poly P(std::initializer_list<std::pair<const char*, int>> terms) {
    Poly p;
    for (const auto& [w, c] : terms) p.add_term(Word::from_string(w), c);
    return p;
}

std::vector<std::vector<Rational>> random_dense(std::mt19937& rng, std::size_t rows, std::size_t cols, int rank_cap) {
    // Product of random rows x cols factors so the rank is at most rank_cap.
    std::uniform_int_distribution<int> v(-4, 4);
    std::vector<std::vector<Rational>> left(rows, std::vector<Rational>(rank_cap)),
        right(rank_cap, std::vector<Rational>(cols)), out(rows, std::vector<Rational>(cols));
    for (auto& r : left)
        for (auto& x : r) x = Rational(v(rng), 1 + (v(rng) & 3));
    for (auto& r : right)
        for (auto& x : r) x = v(rng);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (int t = 0; t < rank_cap; ++t) out[i][j] += left[i][t] * right[t][j];
    return out;
}

} // namespace

TEST(Matrix, FromPolys) {
    const std::vector<Poly> one{P({{"xyy", 1}, {"xxy", -1}})};
    const auto m = matrix_from_polys(one);
    EXPECT_EQ(m.rows(), 1u);
    EXPECT_EQ(m.cols(), 2u);
    EXPECT_EQ(m.column_labels(), std::vector<Word>({Word::from_string("xxy"), Word::from_string("xyy")}));
    EXPECT_EQ(m.at(0, 0), -1);
    EXPECT_EQ(m.at(0, 1), 1);
    EXPECT_EQ(m.to_tsv(), "xxy\txyy\n-1\t1\n");

    const auto empty = matrix_from_polys(std::vector<Poly>{});
    EXPECT_EQ(empty.rows(), 0u);
    EXPECT_EQ(empty.cols(), 0u);

    const std::vector<Poly> dup{P({{"xy", 1}}), P({{"xy", 1}})};
    const auto d = matrix_from_polys(dup);
    EXPECT_EQ(d.rows(), 2u);
    EXPECT_EQ(d.cols(), 1u);
    EXPECT_EQ(rank(d), 1u);

    const std::vector<Poly> mixed{P({{"xy", 1}}), P({{"y", 1}})};
    EXPECT_THROW(matrix_from_polys(mixed), std::invalid_argument);
}

TEST(Matrix, ValidatesRows) {
    EXPECT_THROW(RationalMatrix(2, {{{2, Rational(1)}}}), std::invalid_argument);
    EXPECT_THROW(RationalMatrix(3, {{{1, Rational(1)}, {0, Rational(1)}}}), std::invalid_argument);
    EXPECT_THROW(RationalMatrix(3, {{{1, Rational(0)}}}), std::invalid_argument);
    EXPECT_THROW(RationalMatrix::from_dense({{1, 2}, {3}}), std::invalid_argument);
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank(RationalMatrix::from_dense({{1, 2}, {2, 4}})), 1u);
    EXPECT_EQ(rank(RationalMatrix::from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), 3u);
    EXPECT_EQ(rank(RationalMatrix()), 0u);
    EXPECT_EQ(rank(RationalMatrix::from_dense({{0, 0}, {0, 0}})), 0u);
    EXPECT_EQ(dim_span(rho_n_span_basis(0, 3)), 2u);
    EXPECT_EQ(dim_span(rho_n_span_basis(0, 2)), 1u);
    EXPECT_EQ(dim_span(std::vector<Poly>{}), 0u);
}

TEST(Rank, AgreesWithDenseOracleOnRandomMatrices) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + trial % 9, cols = 1 + (trial * 7) % 11;
        const int cap = 1 + trial % 6;
        const auto dense = random_dense(rng, rows, cols, cap);
        EXPECT_EQ(rank(RationalMatrix::from_dense(dense)), oracle::dense_rank(dense)) << trial;
    }
}

TEST(Rank, InvariantUnderRowShuffleAndScaling) {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        auto dense = random_dense(rng, 8, 10, 1 + trial % 7);
        const auto base = rank(RationalMatrix::from_dense(dense));
        std::shuffle(dense.begin(), dense.end(), rng);
        std::uniform_int_distribution<int> s(1, 9);
        for (auto& r : dense) {
            const Rational f(s(rng) * (s(rng) % 2 ? 1 : -1), s(rng));
            for (auto& x : r) x *= f;
        }
        EXPECT_EQ(rank(RationalMatrix::from_dense(dense)), base);
    }
}

TEST(Rank, AgreesWithDenseOracleOnOperatorImages) {
    for (std::size_t n = 0; n <= 3; ++n)
        for (int k = 1; n + k <= 8; ++k) {
            const auto basis = rho_n_span_basis(n, k);
            EXPECT_EQ(dim_span(basis), oracle::dense_rank_of(basis)) << n << "," << k;
        }
}

TEST(Span, Inclusion) {
    EXPECT_TRUE(spans_include(rho_n_span_basis(1, 2), rho_n_span_basis(0, 3)));
    EXPECT_TRUE(spans_include(std::vector<Poly>{}, rho_n_span_basis(0, 3)));
    EXPECT_FALSE(spans_include(std::vector<Poly>{P({{"xy", 1}})}, std::vector<Poly>{P({{"xx", 1}})}));
    const std::vector<Poly> sup{P({{"xy", 1}, {"yy", 1}}), P({{"xx", 2}})};
    EXPECT_TRUE(spans_include(std::vector<Poly>{P({{"xy", 3}, {"yy", 3}, {"xx", -1}})}, sup));
}

TEST(Span, Table2ByExactRank) {
    const std::vector<std::size_t> table2 = {0, 1, 2, 4, 6, 12, 18, 34, 58};
    for (int k = 2; k <= 10; ++k) EXPECT_EQ(dim_span(rho_n_span_basis(0, k - 1)), table2[k - 2]) << k;
}
