#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "cyclicsum/word.hpp"

namespace csf {

using Rational = mpq_class;

/// Element of H: a finite Q-linear combination of words.
///
/// Terms are kept in the canonical word order (degree, then lex with X < Y) and
/// no stored coefficient is ever zero, so structural equality is equality in H.
class Poly {
public:
    using Terms = std::map<Word, Rational>;
    using const_iterator = Terms::const_iterator;

    Poly() = default;
    /// The monomial `coeff * w`.
    explicit Poly(const Word& w, const Rational& coeff = 1);
    /// Scalar multiple of the unit (empty word).
    static Poly constant(const Rational& c);
    static Poly from_string(std::string_view word) { return Poly(Word::from_string(word)); }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const Terms& terms() const noexcept { return terms_; }
    const_iterator begin() const noexcept { return terms_.begin(); }
    const_iterator end() const noexcept { return terms_.end(); }

    Rational coefficient(const Word& w) const;

    /// Adds `coeff * w`, erasing the term if it cancels.
    void add_term(const Word& w, const Rational& coeff);

    /// True iff every stored word has degree k. The zero polynomial is homogeneous of every degree.
    bool homogeneous(std::size_t k) const noexcept;
    /// The common degree of all terms, if there is one.
    std::optional<std::size_t> degree() const noexcept;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Rational& scalar);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= -1; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    /// Concatenation product in H.
    friend Poly operator*(const Poly& a, const Poly& b);

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Human-readable form such as "xyy - 1/2*xxy"; "0" for the zero polynomial and "1" for the unit word.
    std::string to_string() const;

private:
    Terms terms_;
};

/// Ring multiplication in H (bilinear extension of word concatenation).
inline Poly poly_concat(const Poly& p, const Poly& q) { return p * q; }

} // namespace csf
