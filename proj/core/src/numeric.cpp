#include "cyclicsum/numeric.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cyclicsum/algebra.hpp"
#include "cyclicsum/operators.hpp"

namespace csf {

namespace {

// Past this many terms 2^-n underflows, so the half-split series stops changing.
constexpr std::size_t half_split_terms = 1100;

double inverse_power(std::size_t n, int k) {
    const double inv = 1.0 / static_cast<double>(n);
    double out = 1.0;
    for (int i = 0; i < k; ++i) out *= inv;
    return out;
}

// Neumaier-compensated running sum. Plain forward summation drops every term below
// ulp(S), which for zeta(3) at N = 1e6 loses the whole tail past n ~ 2e5.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double v) {
        const double t = sum + v;
        carry += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + carry; }
};

// sum over n_1 > ... > n_l >= 1 (or >= when `strict` is false), n_1 <= cutoff, of
// outer_weight(n_1) / prod n_i^{k_i}. Prefix sums are built from the innermost index outwards.
template <typename OuterWeight>
double nested_sum(const std::vector<int>& parts, std::size_t cutoff, bool strict, OuterWeight outer_weight) {
    std::vector<double> inner(cutoff + 1, 0.0);
    std::vector<double> cur(cutoff + 1, 0.0);
    for (std::size_t level = parts.size(); level-- > 0;) {
        const bool outermost = level == 0;
        CompensatedSum acc;
        cur[0] = 0.0;
        for (std::size_t n = 1; n <= cutoff; ++n) {
            double below = 1.0;
            if (level + 1 < parts.size()) below = strict ? inner[n - 1] : inner[n];
            double term = inverse_power(n, parts[level]) * below;
            if (outermost) term *= outer_weight(n);
            acc.add(term);
            cur[n] = acc.value();
        }
        std::swap(inner, cur);
    }
    return inner[cutoff];
}

double plain_nested(const MultiIndex& k, std::size_t cutoff) {
    return nested_sum(k.parts(), cutoff, true, [](std::size_t) { return 1.0; });
}

double star_nested(const MultiIndex& k, std::size_t cutoff) {
    return nested_sum(k.parts(), cutoff, false, [](std::size_t) { return 1.0; });
}

// Li_{s}(1/2) for the word x^{s_1-1}y ... x^{s_r-1}y; 1 for the empty word.
double polylog_half(const Word& w, std::size_t cutoff) {
    if (w.empty()) return 1.0;
    const MultiIndex s = index_from_word(w);
    return nested_sum(s.parts(), cutoff, true, [](std::size_t n) { return std::ldexp(1.0, -static_cast<int>(n)); });
}

// Reverse the word and swap x <-> y: the integral over [1/2, 1] becomes one over [0, 1/2].
Word dual(const Word& w) {
    Word out;
    for (std::size_t i = w.degree(); i-- > 0;) out.push_back(w[i] == Letter::X ? Letter::Y : Letter::X);
    return out;
}

double half_split(const MultiIndex& k, std::size_t cutoff) {
    const Word w = word_from_index(k);
    const std::size_t terms = std::min(cutoff, half_split_terms);
    double total = 0.0;
    for (std::size_t j = 0; j <= w.degree(); ++j) {
        const Word head = w.subword(0, j);
        const Word tail = w.subword(j, w.degree() - j);
        total += polylog_half(dual(head), terms) * polylog_half(tail, terms);
    }
    return total;
}

double evaluate(const MultiIndex& k, std::size_t cutoff, Series series) {
    return series == Series::nested ? plain_nested(k, cutoff) : half_split(k, cutoff);
}

NumericValue with_doubling_error(double full, double half) {
    return {full, 2.0 * std::abs(full - half) + 32.0 * DBL_EPSILON * std::max(1.0, std::abs(full))};
}

void require_convergent(const MultiIndex& k, std::size_t cutoff, const char* op) {
    if (!k.admissible())
        throw std::invalid_argument(std::string(op) + ": index " + k.to_string() + " is not admissible");
    if (cutoff < k.depth()) throw std::invalid_argument(std::string(op) + ": cutoff smaller than depth");
}

} // namespace

NumericValue mzv(const MultiIndex& k, std::size_t cutoff, Series series) {
    require_convergent(k, cutoff, "mzv");
    return with_doubling_error(evaluate(k, cutoff, series), evaluate(k, cutoff / 2, series));
}

NumericValue mzsv(const MultiIndex& k, std::size_t cutoff, Series series) {
    require_convergent(k, cutoff, "mzsv");
    return z_numeric(d_map(Poly(word_from_index(k))), cutoff, series);
}

NumericValue mzsv_nested(const MultiIndex& k, std::size_t cutoff) {
    require_convergent(k, cutoff, "mzsv");
    return with_doubling_error(star_nested(k, cutoff), star_nested(k, cutoff / 2));
}

NumericValue z_numeric(const Poly& p, std::size_t cutoff, Series series) {
    NumericValue out;
    for (const auto& [w, c] : p) {
        if (!w.in_h0_basis())
            throw std::invalid_argument("Z: monomial \"" + w.to_string() + "\" is outside H^0");
    }
    for (const auto& [w, c] : p) {
        const double coeff = c.get_d();
        if (w.empty()) {
            out.value += coeff;
            continue;
        }
        NumericValue term = mzv(index_from_word(w), cutoff, series);
        out.value += coeff * term.value;
        out.err += std::abs(coeff) * term.err;
    }
    return out;
}

CsfReport check_csf_numeric(const MultiIndex& k, std::size_t cutoff, double tol, Series series) {
    NumericValue z = z_numeric(rho_csf(k), cutoff, series);
    double residual = std::abs(z.value);
    return CsfReport{k, residual, z.err, tol, cutoff, residual <= tol};
}

MzsvCsfReport check_mzsv_csf(const MultiIndex& k, std::size_t cutoff, double tol, Series series) {
    if (!k.in_check_I1())
        throw std::invalid_argument("MZSV CSF: index " + k.to_string() + " has all parts equal to 1");
    const auto l = static_cast<std::ptrdiff_t>(k.depth());
    double lhs = 0.0;
    for (std::ptrdiff_t j = 0; j < l; ++j) {
        const int kj = k.cyclic(j);
        for (int i = 1; i <= kj - 1; ++i) {
            std::vector<int> parts{kj - i + 1};
            for (std::ptrdiff_t t = 1; t < l; ++t) parts.push_back(k.cyclic(j + t));
            parts.push_back(i);
            lhs += mzsv(MultiIndex(std::move(parts)), cutoff, series).value;
        }
    }
    const int weight = k.weight();
    const double rhs = weight * mzv(MultiIndex{weight + 1}, cutoff, series).value;
    const double residual = std::abs(lhs - rhs);
    return MzsvCsfReport{k, lhs, rhs, residual, tol, cutoff, residual <= tol};
}

} // namespace csf
