#pragma once

#include <cstddef>
#include <vector>

#include "cyclicsum/multi_index.hpp"
#include "cyclicsum/poly.hpp"
#include "cyclicsum/word.hpp"

namespace csf {

/// z_k = x^{k-1} y.
Word z_word(int k);

/// z_{k_1} ... z_{k_l}.
Word word_from_index(const MultiIndex& k);

/// Splits a word at each y. Throws std::invalid_argument unless w is nonempty and ends in y.
MultiIndex index_from_word(const Word& w);

/// Expands every z into x + y. The result has 2^(#z) monomials, each with coefficient 1.
Poly expand(const ExtendedWord& w);

/// Algebra endomorphism x -> x, y -> x + y.
Poly gamma(const Word& w);
Poly gamma(const Poly& p);
/// Inverse of gamma: x -> x, y -> y - x.
Poly gamma_inverse(const Word& w);
Poly gamma_inverse(const Poly& p);

/// d(1) = 1, d(w y) = gamma(w) y, extended linearly to Q + Hy.
/// Throws std::invalid_argument on a nonempty monomial not ending in y.
Poly d_map(const Poly& p);
/// Inverse of d on Q + Hy (uses gamma_inverse).
Poly d_inverse(const Poly& p);

/// Divides each monomial of Hy by its depth (number of y's).
Poly alpha(const Poly& p);
/// Keeps exactly the monomials of depth a.
Poly delta(std::size_t a, const Poly& p);

/// All compositions of k, ordered by their words x^{k_1-1}y...x^{k_l-1}y in the
/// canonical order, i.e. lexicographically in the first k-1 letters with x < y.
/// For k = 3 this is (3), (2,1), (1,2), (1,1,1).
std::vector<MultiIndex> enumerate_compositions(int k);

/// Compositions of k other than (1, ..., 1), in the order of enumerate_compositions.
/// There are 2^(k-1) - 1 of them.
std::vector<MultiIndex> enumerate_check_I1(int k);

} // namespace csf
