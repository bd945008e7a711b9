#include "cyclicsum/algebra.hpp"

#include <stdexcept>

namespace csf {

namespace {

void require_ends_in_y(const Poly& p, const char* op) {
    for (const auto& [w, c] : p)
        if (!w.ends_with_y())
            throw std::invalid_argument(std::string(op) + ": monomial \"" + w.to_string() +
                                        "\" does not end in y");
}

// Image of w under the algebra map x -> x, y -> y_image.
Poly substitute_y(const Word& w, const Poly& y_image) {
    const Poly x_image(Word{Letter::X});
    Poly out = Poly::constant(1);
    for (std::size_t i = 0; i < w.degree(); ++i) out = out * (w[i] == Letter::X ? x_image : y_image);
    return out;
}

const Poly& x_plus_y() {
    static const Poly p = Poly::from_string("x") + Poly::from_string("y");
    return p;
}

const Poly& y_minus_x() {
    static const Poly p = Poly::from_string("y") - Poly::from_string("x");
    return p;
}

template <typename F>
Poly map_linear(const Poly& p, F&& image) {
    Poly out;
    for (const auto& [w, c] : p) out += image(w) * c;
    return out;
}

} // namespace

Word z_word(int k) {
    if (k < 1) throw std::invalid_argument("z_k: k must be positive");
    Word w = Word::power(Letter::X, static_cast<std::size_t>(k - 1));
    w.push_back(Letter::Y);
    return w;
}

Word word_from_index(const MultiIndex& k) {
    Word w;
    for (int part : k.parts()) w = w * z_word(part);
    return w;
}

MultiIndex index_from_word(const Word& w) {
    if (!w.ends_with_y())
        throw std::invalid_argument("index_from_word: \"" + w.to_string() + "\" is not a product of z_k");
    std::vector<int> parts;
    int run = 1;
    for (std::size_t i = 0; i < w.degree(); ++i) {
        if (w[i] == Letter::X) {
            ++run;
        } else {
            parts.push_back(run);
            run = 1;
        }
    }
    return MultiIndex(std::move(parts));
}

Poly expand(const ExtendedWord& w) {
    // Enumerate the 2^(#z) choices directly; every resulting word is distinct.
    std::vector<std::size_t> z_positions;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == ExtendedLetter::Z) z_positions.push_back(i);
    if (w.size() > Word::max_degree) throw std::length_error("expand: word too long");
    if (z_positions.size() >= 63) throw std::length_error("expand: too many z letters");

    std::uint64_t base = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        base = (base << 1) | (w[i] == ExtendedLetter::Y ? 1U : 0U);

    Poly out;
    const std::uint64_t choices = 1ULL << z_positions.size();
    for (std::uint64_t mask = 0; mask < choices; ++mask) {
        std::uint64_t bits = base;
        for (std::size_t j = 0; j < z_positions.size(); ++j)
            if ((mask >> j) & 1U) bits |= 1ULL << (w.size() - 1 - z_positions[j]);
        out.add_term(Word::from_bits(bits, w.size()), 1);
    }
    return out;
}

Poly gamma(const Word& w) { return substitute_y(w, x_plus_y()); }
Poly gamma(const Poly& p) { return map_linear(p, [](const Word& w) { return gamma(w); }); }
Poly gamma_inverse(const Word& w) { return substitute_y(w, y_minus_x()); }
Poly gamma_inverse(const Poly& p) { return map_linear(p, [](const Word& w) { return gamma_inverse(w); }); }

Poly d_map(const Poly& p) {
    const Poly y = Poly::from_string("y");
    return map_linear(p, [&](const Word& w) {
        if (w.empty()) return Poly::constant(1);
        if (!w.ends_with_y())
            throw std::invalid_argument("d: monomial \"" + w.to_string() + "\" is not in Q + Hy");
        return gamma(w.subword(0, w.degree() - 1)) * y;
    });
}

Poly d_inverse(const Poly& p) {
    const Poly y = Poly::from_string("y");
    return map_linear(p, [&](const Word& w) {
        if (w.empty()) return Poly::constant(1);
        if (!w.ends_with_y())
            throw std::invalid_argument("d^-1: monomial \"" + w.to_string() + "\" is not in Q + Hy");
        return gamma_inverse(w.subword(0, w.degree() - 1)) * y;
    });
}

Poly alpha(const Poly& p) {
    require_ends_in_y(p, "alpha");
    Poly out;
    for (const auto& [w, c] : p) out.add_term(w, c / Rational(static_cast<long>(w.y_count())));
    return out;
}

Poly delta(std::size_t a, const Poly& p) {
    require_ends_in_y(p, "delta");
    Poly out;
    for (const auto& [w, c] : p)
        if (w.y_count() == a) out.add_term(w, c);
    return out;
}

std::vector<MultiIndex> enumerate_compositions(int k) {
    if (k < 1) throw std::invalid_argument("compositions: k must be positive");
    if (k > 63) throw std::length_error("compositions: k too large");
    const auto free_letters = static_cast<std::size_t>(k - 1);
    std::vector<MultiIndex> out;
    out.reserve(std::size_t{1} << free_letters);
    for (std::uint64_t prefix = 0; prefix < (1ULL << free_letters); ++prefix)
        out.push_back(index_from_word(Word::from_bits((prefix << 1) | 1U, free_letters + 1)));
    return out;
}

std::vector<MultiIndex> enumerate_check_I1(int k) {
    auto all = enumerate_compositions(k);
    all.pop_back(); // the all-ones composition y^k is last in the order
    return all;
}

} // namespace csf
