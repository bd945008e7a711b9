#include <random>

#include <gtest/gtest.h>

#include "cyclicsum/algebra.hpp"
#include "cyclicsum/multi_index.hpp"
#include "cyclicsum/poly.hpp"
#include "cyclicsum/word.hpp"
#include "oracles.hpp"

using namespace csf;

namespace {

Poly P(std::initializer_list<std::pair<const char*, int>> terms) {
    Poly p;
    for (const auto& [w, c] : terms) p.add_term(Word::from_string(w), c);
    return p;
}

Poly Z(std::initializer_list<int> k) { return Poly(word_from_index(MultiIndex(k))); }

} // namespace

TEST(Word, ParsesAndPrints) {
    const Word w = Word::from_string("xxyxy");
    EXPECT_EQ(w.degree(), 5u);
    EXPECT_EQ(w.to_string(), "xxyxy");
    EXPECT_EQ(w.y_count(), 2u);
    EXPECT_EQ(w[0], Letter::X);
    EXPECT_EQ(w[2], Letter::Y);
    EXPECT_THROW(Word::from_string("xzy"), std::invalid_argument);
    EXPECT_TRUE(Word().empty());
}

TEST(Word, CanonicalOrderIsDegreeThenLex) {
    EXPECT_LT(Word::from_string("y"), Word::from_string("xx"));
    EXPECT_LT(Word::from_string("xxy"), Word::from_string("xyx"));
    EXPECT_LT(Word(), Word::from_string("x"));
}

TEST(Word, ConcatAndSubword) {
    const Word a = Word::from_string("xy"), b = Word::from_string("yxx");
    EXPECT_EQ((a * b).to_string(), "xyyxx");
    EXPECT_EQ((a * b).subword(1, 3).to_string(), "yyx");
    EXPECT_EQ((a * Word()), a);
}

TEST(Word, BasisPredicates) {
    EXPECT_TRUE(Word().in_h0_basis());
    EXPECT_TRUE(Word::from_string("xy").in_h0_basis());
    EXPECT_FALSE(Word::from_string("yy").in_h0_basis());
    EXPECT_FALSE(Word::from_string("xx").in_h0_basis());
    EXPECT_TRUE(Word::from_string("yxy").in_check_h1_basis());
    EXPECT_FALSE(Word::from_string("yyy").in_check_h1_basis());
    EXPECT_FALSE(Word::from_string("xyx").in_check_h1_basis());
}

TEST(Word, ExtendedWordCountsZ) {
    const auto w = ExtendedWord::from_string("zxzy");
    EXPECT_EQ(w.size(), 4u);
    EXPECT_EQ(w.z_count(), 2u);
    EXPECT_EQ(w.to_string(), "zxzy");
}

TEST(Poly, CancellationLeavesNoZeroTerms) {
    Poly p = P({{"xy", 1}, {"yy", 2}});
    p.add_term(Word::from_string("xy"), -1);
    EXPECT_EQ(p.size(), 1u);
    EXPECT_EQ(p.coefficient(Word::from_string("xy")), 0);
    EXPECT_TRUE((p - p).is_zero());
}

TEST(Poly, ToString) {
    EXPECT_EQ(P({{"xyy", 1}, {"xxy", -1}}).to_string(), "-xxy + xyy");
    EXPECT_EQ((Poly(Word::from_string("xyy")) * Rational(1, 2)).to_string(), "1/2*xyy");
    EXPECT_EQ(Poly().to_string(), "0");
    EXPECT_EQ(Poly::constant(1).to_string(), "1");
}

TEST(Poly, ConcatExamples) {
    EXPECT_EQ(poly_concat(P({{"xy", 1}}), P({{"y", 1}})), P({{"xyy", 1}}));
    EXPECT_TRUE(poly_concat(P({{"xy", 1}, {"yy", 1}}), Poly()).is_zero());
    const Poly s = P({{"x", 1}, {"y", 1}});
    EXPECT_EQ(s * s, expand(ExtendedWord::from_string("zz")));
}

TEST(Poly, DegreeAndHomogeneity) {
    EXPECT_EQ(P({{"xy", 1}, {"yy", 3}}).degree(), 2u);
    EXPECT_FALSE(P({{"xy", 1}, {"y", 3}}).degree().has_value());
    EXPECT_TRUE(Poly().homogeneous(7));
}

TEST(Poly, RingAxiomsOnRandomInputs) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Poly a = oracle::random_poly(rng, 3, 4), b = oracle::random_poly(rng, 2, 3),
                   c = oracle::random_poly(rng, 2, 3);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a + b, b + a);
    }
}

TEST(MultiIndex, BasicsAndCyclicAccess) {
    const MultiIndex k{4, 2, 1};
    EXPECT_EQ(k.weight(), 7);
    EXPECT_EQ(k.depth(), 3u);
    EXPECT_TRUE(k.admissible());
    EXPECT_FALSE(MultiIndex({1, 2}).admissible());
    EXPECT_FALSE(MultiIndex({1, 1}).in_check_I1());
    EXPECT_EQ(k.to_string(), "(4,2,1)");
    for (std::ptrdiff_t j = -7; j < 7; ++j) EXPECT_EQ(k.cyclic(j), k.cyclic(j + 3));
    EXPECT_EQ(k.rotated(1), MultiIndex({2, 1, 4}));
    EXPECT_THROW(MultiIndex(std::vector<int>{}), std::invalid_argument);
    EXPECT_THROW(MultiIndex({2, 0}), std::invalid_argument);
}

TEST(Algebra, WordIndexRoundTrip) {
    EXPECT_EQ(word_from_index({2}).to_string(), "xy");
    EXPECT_EQ(word_from_index({2, 1}).to_string(), "xyy");
    EXPECT_EQ(word_from_index({4, 2, 1}).to_string(), "xxxyxyy");
    EXPECT_EQ(index_from_word(Word::from_string("xyy")), MultiIndex({2, 1}));
    EXPECT_EQ(index_from_word(Word::from_string("y")), MultiIndex({1}));
    EXPECT_EQ(index_from_word(Word::from_string("xxyxy")), MultiIndex({3, 2}));
    EXPECT_THROW(index_from_word(Word::from_string("xyx")), std::invalid_argument);
    EXPECT_THROW(index_from_word(Word()), std::invalid_argument);
    for (int k = 1; k <= 8; ++k)
        for (const auto& c : enumerate_compositions(k)) EXPECT_EQ(index_from_word(word_from_index(c)), c);
}

TEST(Algebra, ExpandMatchesStringOracle) {
    EXPECT_EQ(expand(ExtendedWord::from_string("zy")), P({{"xy", 1}, {"yy", 1}}));
    EXPECT_EQ(expand(ExtendedWord::from_string("xy")), P({{"xy", 1}}));
    EXPECT_EQ(expand(ExtendedWord::from_string("zz")), P({{"xx", 1}, {"xy", 1}, {"yx", 1}, {"yy", 1}}));
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = oracle::random_word(rng, "xyz", 1 + trial % 8);
        oracle::StrPoly ref;
        oracle::expand_into(s, 1, ref);
        EXPECT_EQ(expand(ExtendedWord::from_string(s)), oracle::to_poly(ref)) << s;
    }
}

TEST(Algebra, GammaExamplesAndInverse) {
    EXPECT_EQ(gamma(Word::from_string("y")), P({{"x", 1}, {"y", 1}}));
    EXPECT_EQ(gamma(Word::from_string("xy")), P({{"xx", 1}, {"xy", 1}}));
    EXPECT_EQ(gamma_inverse(P({{"x", 1}, {"y", 1}})), P({{"y", 1}}));
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const Poly p = oracle::random_poly(rng, 1 + trial % 6, 4);
        EXPECT_EQ(gamma_inverse(gamma(p)), p);
        EXPECT_EQ(gamma(gamma_inverse(p)), p);
    }
}

TEST(Algebra, GammaIsMultiplicative) {
    std::mt19937 rng(6);
    for (int trial = 0; trial < 30; ++trial) {
        const Poly a = oracle::random_poly(rng, 3, 3), b = oracle::random_poly(rng, 3, 3);
        EXPECT_EQ(gamma(a * b), gamma(a) * gamma(b));
    }
}

TEST(Algebra, DMapExamples) {
    EXPECT_EQ(d_map(Z({2, 1})), Z({2, 1}) + Z({3}));
    EXPECT_EQ(d_map(Z({4, 2, 1})), Z({4, 2, 1}) + Z({6, 1}) + Z({4, 3}) + Z({7}));
    EXPECT_EQ(d_map(P({{"y", 1}})), P({{"y", 1}}));
    EXPECT_EQ(d_map(Poly::constant(1)), Poly::constant(1));
    EXPECT_THROW(d_map(P({{"xyx", 1}})), std::invalid_argument);
}

TEST(Algebra, DMapIsTheStarSumExpansion) {
    // d(z_k) sums z-words obtained by merging adjacent parts, i.e. the star-to-plain expansion.
    for (int w = 1; w <= 7; ++w) {
        for (const auto& k : enumerate_compositions(w)) {
            Poly expected;
            const auto l = k.depth();
            for (std::uint64_t cuts = 0; cuts < (1ULL << (l - 1)); ++cuts) {
                std::vector<int> merged{k.parts()[0]};
                for (std::size_t i = 1; i < l; ++i) {
                    if (cuts >> (i - 1) & 1)
                        merged.back() += k.parts()[i];
                    else
                        merged.push_back(k.parts()[i]);
                }
                expected.add_term(word_from_index(MultiIndex(merged)), 1);
            }
            EXPECT_EQ(d_map(Poly(word_from_index(k))), expected) << k.to_string();
            EXPECT_EQ(d_inverse(expected), Poly(word_from_index(k)));
        }
    }
}

TEST(Algebra, AlphaAndDelta) {
    const Poly mixed = Z({2, 1}) + Z({3});
    EXPECT_EQ(alpha(Z({2, 1})), Z({2, 1}) * Rational(1, 2));
    EXPECT_EQ(alpha(Z({7})), Z({7}));
    EXPECT_EQ(alpha(mixed), Z({2, 1}) * Rational(1, 2) + Z({3}));
    EXPECT_EQ(delta(2, mixed), Z({2, 1}));
    EXPECT_EQ(delta(1, mixed), Z({3}));
    EXPECT_TRUE(delta(3, mixed).is_zero());
}

TEST(Algebra, DeltaPartsSumToWhole) {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const Poly p = oracle::random_poly(rng, 6, 6, "y");
        Poly sum, weighted;
        for (std::size_t a = 1; a <= 6; ++a) {
            sum += delta(a, p);
            weighted += delta(a, p) * Rational(1, static_cast<long>(a));
        }
        EXPECT_EQ(sum, p);
        EXPECT_EQ(weighted, alpha(p));
    }
}

TEST(Algebra, Enumerations) {
    EXPECT_TRUE(enumerate_check_I1(1).empty());
    EXPECT_EQ(enumerate_check_I1(2), std::vector<MultiIndex>({{2}}));
    EXPECT_EQ(enumerate_check_I1(3), std::vector<MultiIndex>({{3}, {2, 1}, {1, 2}}));
    int total = 0;
    for (int k = 1; k <= 10; ++k) {
        const auto all = enumerate_compositions(k);
        EXPECT_EQ(all.size(), std::size_t{1} << (k - 1));
        EXPECT_EQ(enumerate_check_I1(k).size(), (std::size_t{1} << (k - 1)) - 1);
        for (std::size_t i = 1; i < all.size(); ++i)
            EXPECT_LT(word_from_index(all[i - 1]), word_from_index(all[i]));
        for (const auto& c : all) EXPECT_EQ(c.weight(), k);
        if (k <= 6) total += static_cast<int>(all.size());
    }
    EXPECT_EQ(total, 63);
}
