#include "cyclicsum/poly.hpp"

namespace csf {

Poly::Poly(const Word& w, const Rational& coeff) { add_term(w, coeff); }

Poly Poly::constant(const Rational& c) { return Poly(Word{}, c); }

Rational Poly::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Word& w, const Rational& coeff) {
    if (sgn(coeff) == 0) return;
    // mpq_class built from a string or two integers is not reduced, and GMP arithmetic assumes it is.
    Rational c = coeff;
    if (c.get_den() != 1) c.canonicalize();
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

bool Poly::homogeneous(std::size_t k) const noexcept {
    for (const auto& [w, c] : terms_)
        if (w.degree() != k) return false;
    return true;
}

std::optional<std::size_t> Poly::degree() const noexcept {
    if (terms_.empty()) return std::nullopt;
    // Terms are ordered by degree first.
    std::size_t lo = terms_.begin()->first.degree();
    std::size_t hi = terms_.rbegin()->first.degree();
    if (lo != hi) return std::nullopt;
    return lo;
}

Poly& Poly::operator+=(const Poly& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
    if (sgn(scalar) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= scalar;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [u, cu] : a.terms_)
        for (const auto& [v, cv] : b.terms_) out.add_term(u * v, cu * cv);
    return out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        std::string word = w.empty() ? "1" : w.to_string();
        if (mag == 1) {
            out += word;
        } else {
            out += mag.get_str();
            if (!w.empty()) out += "*" + word;
        }
    }
    return out;
}

} // namespace csf
