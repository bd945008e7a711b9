#pragma once

#include <cstddef>
#include <vector>

#include "cyclicsum/combinatorics.hpp"
#include "cyclicsum/multi_index.hpp"
#include "cyclicsum/poly.hpp"
#include "cyclicsum/word.hpp"

namespace csf {

/// sgn(x) = 1, sgn(y) = -1, sgn(z) = 0.
enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

Sign sgn(ExtendedLetter u) noexcept;

/// rho_n(w) = sum_j sgn(u_j) x u_{j+1} ... u_k z^n u_1 ... u_{j-1} y, with every z expanded.
///
/// This is the production path; the tensor pipeline m_n(c_n(n, w)) computes the
/// same polynomial and is kept as a cross-check. Note the numbering: rho_0 is the
/// cyclic-sum map itself (some references call it rho_1).
Poly rho_n_direct(std::size_t n, const ExtendedWord& w);
Poly rho_n_direct(std::size_t n, const Word& w);
/// Linear extension to H.
Poly rho_n_direct(std::size_t n, const Poly& p);

/// The cyclic-sum-formula map on z_{k_1} ... z_{k_l}:
///   sum_j sum_{i=1}^{k_j-1} z_{k_j-i+1} z_{k_{j+1}} ... z_{k_{j+l-1}} z_i
/// - sum_j z_{k_j+1} z_{k_{j+1}} ... z_{k_{j+l-1}}.
/// Throws std::invalid_argument if every part equals 1.
Poly rho_csf(const MultiIndex& k);

/// rho_0 of any representative of the necklace.
Poly rho_tilde0(const CyclicWord& c);

/// The star-side operator, computed as d^-1(rho_n(w)).
Poly rho_bar_n(std::size_t n, const Word& w);
Poly rho_bar_n(std::size_t n, const Poly& p);

/// The star-side operator evaluated as M_n(C-bar_n(w)) through the twisted Leibniz rule.
Poly rho_bar_n_tensor(std::size_t n, const Word& w);

/// { rho_n(word_from_index(kappa)) : kappa in enumerate_check_I1(k) }, spanning rho_n of the
/// degree-k part of the space of words ending in y that are not powers of y.
std::vector<Poly> rho_n_span_basis(std::size_t n, int k);

/// Same indexing as rho_n_span_basis, with rho-bar_n images.
std::vector<Poly> rho_bar_n_span_basis(std::size_t n, int k);

} // namespace csf
