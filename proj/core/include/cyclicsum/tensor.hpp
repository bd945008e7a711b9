#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cyclicsum/poly.hpp"
#include "cyclicsum/word.hpp"

namespace csf {

/// One pure tensor w_1 (x) ... (x) w_{n+2} of words over {x, y}.
using TensorTerm = std::vector<Word>;

/// An element of the (n+2)-nd tensor power of H.
class TensorComb {
public:
    using Terms = std::map<TensorTerm, Rational>;

    explicit TensorComb(std::size_t n) : n_(n) {}

    /// The pure tensor of the given slots; z-letters must already be expanded.
    static TensorComb pure(std::size_t n, const TensorTerm& slots, const Rational& coeff = 1);

    std::size_t n() const noexcept { return n_; }
    std::size_t slot_count() const noexcept { return n_ + 2; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Throws std::invalid_argument if the slot count is not n + 2.
    void add_term(const TensorTerm& slots, const Rational& coeff);

    TensorComb& operator+=(const TensorComb& other);
    TensorComb& operator*=(const Rational& scalar);
    friend TensorComb operator+(TensorComb a, const TensorComb& b) { return a += b; }

    friend bool operator==(const TensorComb&, const TensorComb&) = default;

    std::string to_string() const;

private:
    std::size_t n_;
    Terms terms_;
};

/// a <> t <> b: the right factor b multiplies slot 1 on the right, the left
/// factor a multiplies slot n+2 on the left.
TensorComb diamond(const Poly& left, const TensorComb& t, const Poly& right);

/// The tensor-valued derivation C_n, evaluated through the Leibniz rule
/// C_n(u w') = C_n(u) <> w' + u <> C_n(w'), with C_n(x) = -C_n(y) = x (x) z^(x)n (x) y
/// and C_n(z) = 0. Slots holding z are expanded before storage.
TensorComb c_n(std::size_t n, const ExtendedWord& w);

/// The star-side variant: C-bar_n(x) = -C-bar_n(y) = x (x) y^(x)(n+1) and the twisted rule
/// C-bar_n(u w') = C-bar_n(u) <> gamma^-1(w') + gamma^-1(u) <> C-bar_n(w').
TensorComb c_bar_n(std::size_t n, const Word& w);

/// Concatenates the slots of each term.
Poly m_n(const TensorComb& t);

} // namespace csf
