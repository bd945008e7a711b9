#include "cyclicsum/operators.hpp"

#include <stdexcept>

#include "cyclicsum/algebra.hpp"
#include "cyclicsum/tensor.hpp"

namespace csf {

Sign sgn(ExtendedLetter u) noexcept {
    switch (u) {
    case ExtendedLetter::X: return Sign::Positive;
    case ExtendedLetter::Y: return Sign::Negative;
    case ExtendedLetter::Z: return Sign::Zero;
    }
    return Sign::Zero;
}

Poly rho_n_direct(std::size_t n, const ExtendedWord& w) {
    Poly out;
    const auto& u = w.letters();
    const std::size_t k = u.size();
    for (std::size_t j = 0; j < k; ++j) {
        const Sign s = sgn(u[j]);
        if (s == Sign::Zero) continue;
        // x u_{j+1} ... u_k z^n u_1 ... u_{j-1} y
        std::vector<ExtendedLetter> letters;
        letters.reserve(k + n + 1);
        letters.push_back(ExtendedLetter::X);
        letters.insert(letters.end(), u.begin() + static_cast<std::ptrdiff_t>(j) + 1, u.end());
        letters.insert(letters.end(), n, ExtendedLetter::Z);
        letters.insert(letters.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(j));
        letters.push_back(ExtendedLetter::Y);
        Poly term = expand(ExtendedWord(std::move(letters)));
        if (s == Sign::Positive) {
            out += term;
        } else {
            out -= term;
        }
    }
    return out;
}

Poly rho_n_direct(std::size_t n, const Word& w) { return rho_n_direct(n, ExtendedWord(w)); }

Poly rho_n_direct(std::size_t n, const Poly& p) {
    Poly out;
    for (const auto& [w, c] : p) out += rho_n_direct(n, w) * c;
    return out;
}

Poly rho_csf(const MultiIndex& k) {
    if (!k.in_check_I1()) throw std::invalid_argument("rho: index " + k.to_string() + " has all parts equal to 1");
    const auto l = static_cast<std::ptrdiff_t>(k.depth());
    Poly out;
    for (std::ptrdiff_t j = 0; j < l; ++j) {
        const int kj = k.cyclic(j);
        // Middle parts k_{j+1} .. k_{j+l-1}.
        std::vector<int> middle;
        for (std::ptrdiff_t t = 1; t < l; ++t) middle.push_back(k.cyclic(j + t));

        for (int i = 1; i <= kj - 1; ++i) {
            std::vector<int> parts{kj - i + 1};
            parts.insert(parts.end(), middle.begin(), middle.end());
            parts.push_back(i);
            out.add_term(word_from_index(MultiIndex(std::move(parts))), 1);
        }
        std::vector<int> parts{kj + 1};
        parts.insert(parts.end(), middle.begin(), middle.end());
        out.add_term(word_from_index(MultiIndex(std::move(parts))), -1);
    }
    return out;
}

Poly rho_tilde0(const CyclicWord& c) { return rho_n_direct(0, c.canonical().to_extended_word()); }

Poly rho_bar_n(std::size_t n, const Word& w) { return d_inverse(rho_n_direct(n, w)); }

Poly rho_bar_n(std::size_t n, const Poly& p) { return d_inverse(rho_n_direct(n, p)); }

Poly rho_bar_n_tensor(std::size_t n, const Word& w) { return m_n(c_bar_n(n, w)); }

std::vector<Poly> rho_n_span_basis(std::size_t n, int k) {
    std::vector<Poly> out;
    for (const auto& kappa : enumerate_check_I1(k)) out.push_back(rho_n_direct(n, word_from_index(kappa)));
    return out;
}

std::vector<Poly> rho_bar_n_span_basis(std::size_t n, int k) {
    std::vector<Poly> out;
    for (const auto& kappa : enumerate_check_I1(k)) out.push_back(rho_bar_n(n, word_from_index(kappa)));
    return out;
}

} // namespace csf
