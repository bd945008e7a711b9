#pragma once

#include <cstddef>

#include "cyclicsum/multi_index.hpp"
#include "cyclicsum/poly.hpp"

namespace csf {

/// A double-precision value with a nonnegative truncation-error estimate.
struct NumericValue {
    double value = 0.0;
    double err = 0.0;
};

/// Which truncated series evaluates an MZV.
enum class Series {
    /// The defining sum over n_1 > ... > n_l >= 1 cut at n_1 <= N. Tail ~ (log N)^(l-1) / N.
    nested,
    /// The iterated integral split at t = 1/2: a sum over prefix/suffix pairs of products of
    /// polylogarithms at 1/2, each cut at n_1 <= N. Tail ~ 2^-N.
    half_split,
};

inline constexpr std::size_t default_cutoff = 1'000'000;

/// zeta(k) from the partial sums of the chosen series, via depth-wise prefix sums in
/// O(depth * N). err = 2 |S(N) - S(N/2)| plus a rounding allowance.
/// Throws std::invalid_argument if k is not admissible or N < depth(k).
NumericValue mzv(const MultiIndex& k, std::size_t cutoff = default_cutoff, Series series = Series::half_split);

/// zeta-star(k) as Z(d(z_k)), i.e. the plain-MZV expansion of the star sum.
NumericValue mzsv(const MultiIndex& k, std::size_t cutoff = default_cutoff, Series series = Series::half_split);

/// zeta-star(k) from the defining sum over n_1 >= ... >= n_l >= 1 cut at n_1 <= N.
NumericValue mzsv_nested(const MultiIndex& k, std::size_t cutoff = default_cutoff);

/// The evaluation map on H^0: sum of coeff * zeta(index(w)), with Z(1) = 1.
/// Throws std::invalid_argument on a monomial outside H^0.
NumericValue z_numeric(const Poly& p, std::size_t cutoff = default_cutoff, Series series = Series::half_split);

struct CsfReport {
    MultiIndex index;
    double residual = 0.0;
    double err = 0.0;
    double tol = 0.0;
    std::size_t cutoff = 0;
    bool pass = false;
};

struct MzsvCsfReport {
    MultiIndex index;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    double tol = 0.0;
    std::size_t cutoff = 0;
    bool pass = false;
};

/// |Z(rho(k))| against tol. Throws for an all-ones index.
CsfReport check_csf_numeric(const MultiIndex& k, std::size_t cutoff, double tol,
                            Series series = Series::half_split);

/// sum_j sum_i zeta-star(k_j - i + 1, k_{j+1}, ..., k_{j+l-1}, i) against weight * zeta(weight + 1).
MzsvCsfReport check_mzsv_csf(const MultiIndex& k, std::size_t cutoff, double tol,
                             Series series = Series::half_split);

} // namespace csf
