#include "cyclicsum/tensor.hpp"

#include <stdexcept>

#include "cyclicsum/algebra.hpp"

namespace csf {

TensorComb TensorComb::pure(std::size_t n, const TensorTerm& slots, const Rational& coeff) {
    TensorComb t(n);
    t.add_term(slots, coeff);
    return t;
}

void TensorComb::add_term(const TensorTerm& slots, const Rational& coeff) {
    if (slots.size() != slot_count())
        throw std::invalid_argument("tensor: expected " + std::to_string(slot_count()) + " slots, got " +
                                    std::to_string(slots.size()));
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.try_emplace(slots, coeff);
    if (inserted) return;
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
}

TensorComb& TensorComb::operator+=(const TensorComb& other) {
    if (other.n_ != n_) throw std::invalid_argument("tensor: mismatched tensor powers");
    for (const auto& [slots, c] : other.terms_) add_term(slots, c);
    return *this;
}

TensorComb& TensorComb::operator*=(const Rational& scalar) {
    if (sgn(scalar) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [slots, c] : terms_) c *= scalar;
    return *this;
}

std::string TensorComb::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [slots, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.get_str() + ")*(";
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (i) out += " (x) ";
            out += slots[i].empty() ? "1" : slots[i].to_string();
        }
        out += ")";
    }
    return out;
}

TensorComb diamond(const Poly& left, const TensorComb& t, const Poly& right) {
    TensorComb out(t.n());
    const std::size_t last = t.slot_count() - 1;
    for (const auto& [slots, c] : t.terms()) {
        for (const auto& [b, cb] : right) {
            for (const auto& [a, ca] : left) {
                TensorTerm s = slots;
                s.front() = s.front() * b;
                s[last] = a * s[last];
                out.add_term(s, c * cb * ca);
            }
        }
    }
    return out;
}

namespace {

// x (x) middle^(x)count (x) y with the middle slot expanded; middle is a sum of single letters.
TensorComb generator_image(std::size_t n, const Poly& middle, std::size_t count, const Rational& sign) {
    TensorComb out(n);
    if (sgn(sign) == 0) return out;
    std::vector<TensorTerm> partial{TensorTerm{Word{Letter::X}}};
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<TensorTerm> next;
        for (const auto& p : partial)
            for (const auto& [w, c] : middle) {
                (void)c;
                TensorTerm q = p;
                q.push_back(w);
                next.push_back(std::move(q));
            }
        partial = std::move(next);
    }
    for (auto& p : partial) {
        p.push_back(Word{Letter::Y});
        out.add_term(p, sign);
    }
    return out;
}

Poly letter_poly(ExtendedLetter l) {
    switch (l) {
    case ExtendedLetter::X: return Poly::from_string("x");
    case ExtendedLetter::Y: return Poly::from_string("y");
    case ExtendedLetter::Z: return Poly::from_string("x") + Poly::from_string("y");
    }
    return {};
}

Rational letter_sign(ExtendedLetter l) {
    switch (l) {
    case ExtendedLetter::X: return 1;
    case ExtendedLetter::Y: return -1;
    case ExtendedLetter::Z: return 0;
    }
    return 0;
}

} // namespace

TensorComb c_n(std::size_t n, const ExtendedWord& w) {
    const Poly z = letter_poly(ExtendedLetter::Z);
    if (w.empty()) return TensorComb(n);
    // C_n(u w') = C_n(u) <> w' + u <> C_n(w'), peeling the first letter.
    const ExtendedLetter head = w[0];
    ExtendedWord tail(std::vector<ExtendedLetter>(w.letters().begin() + 1, w.letters().end()));
    TensorComb head_image = generator_image(n, z, n, letter_sign(head));
    TensorComb out = diamond(Poly::constant(1), head_image, expand(tail));
    out += diamond(letter_poly(head), c_n(n, tail), Poly::constant(1));
    return out;
}

TensorComb c_bar_n(std::size_t n, const Word& w) {
    const Poly y = Poly::from_string("y");
    if (w.empty()) return TensorComb(n);
    const Word head = w.subword(0, 1);
    const Word tail = w.subword(1, w.degree() - 1);
    const Rational sign = head.front() == Letter::X ? 1 : -1;
    // The generator image x (x) y^(x)(n+1): n middle slots of y plus the final y.
    TensorComb head_image = generator_image(n, y, n, sign);
    TensorComb out = diamond(Poly::constant(1), head_image, gamma_inverse(tail));
    out += diamond(gamma_inverse(head), c_bar_n(n, tail), Poly::constant(1));
    return out;
}

Poly m_n(const TensorComb& t) {
    Poly out;
    for (const auto& [slots, c] : t.terms()) {
        Word w;
        for (const auto& s : slots) w = w * s;
        out.add_term(w, c);
    }
    return out;
}

} // namespace csf
