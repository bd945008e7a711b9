#include "cyclicsum/word.hpp"

#include <bit>
#include <stdexcept>

namespace csf {

char to_char(Letter l) noexcept { return l == Letter::X ? 'x' : 'y'; }

char to_char(ExtendedLetter l) noexcept {
    switch (l) {
    case ExtendedLetter::X: return 'x';
    case ExtendedLetter::Y: return 'y';
    case ExtendedLetter::Z: return 'z';
    }
    return '?';
}

Word::Word(std::initializer_list<Letter> letters) {
    for (Letter l : letters) push_back(l);
}

Word Word::from_string(std::string_view text) {
    Word w;
    for (char c : text) {
        if (c == 'x') {
            w.push_back(Letter::X);
        } else if (c == 'y') {
            w.push_back(Letter::Y);
        } else {
            throw std::invalid_argument("word: unexpected letter '" + std::string(1, c) + "' in \"" +
                                        std::string(text) + "\"");
        }
    }
    return w;
}

Word Word::from_bits(std::uint64_t bits, std::size_t degree) {
    if (degree > max_degree) throw std::length_error("word: degree exceeds 64");
    if (degree < 64 && (bits >> degree) != 0) throw std::invalid_argument("word: stray bits above degree");
    Word w;
    w.bits_ = bits;
    w.length_ = static_cast<std::uint8_t>(degree);
    return w;
}

Word Word::power(Letter l, std::size_t count) {
    Word w;
    for (std::size_t i = 0; i < count; ++i) w.push_back(l);
    return w;
}

void Word::push_back(Letter l) {
    if (length_ == max_degree) throw std::length_error("word: degree exceeds 64");
    bits_ = (bits_ << 1) | static_cast<std::uint64_t>(l);
    ++length_;
}

Word Word::subword(std::size_t pos, std::size_t count) const {
    if (pos + count > length_) throw std::out_of_range("word: subword out of range");
    if (count == 0) return {};
    std::uint64_t shifted = bits_ >> (length_ - pos - count);
    std::uint64_t mask = count == 64 ? ~0ULL : ((1ULL << count) - 1);
    return from_bits(shifted & mask, count);
}

std::size_t Word::y_count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

bool Word::in_h0_basis() const noexcept {
    return empty() || (front() == Letter::X && back() == Letter::Y);
}

bool Word::in_check_h1_basis() const noexcept {
    return ends_with_y() && y_count() != length_;
}

std::string Word::to_string() const {
    std::string out;
    out.reserve(length_);
    for (std::size_t i = 0; i < length_; ++i) out.push_back(to_char((*this)[i]));
    return out;
}

Word operator*(const Word& a, const Word& b) {
    if (a.degree() + b.degree() > Word::max_degree) throw std::length_error("word: degree exceeds 64");
    if (b.empty()) return a;
    if (a.empty()) return b;
    return Word::from_bits((a.bits_ << b.length_) | b.bits_, a.degree() + b.degree());
}

ExtendedWord::ExtendedWord(const Word& w) {
    letters_.reserve(w.degree());
    for (std::size_t i = 0; i < w.degree(); ++i)
        letters_.push_back(w[i] == Letter::X ? ExtendedLetter::X : ExtendedLetter::Y);
}

ExtendedWord ExtendedWord::from_string(std::string_view text) {
    ExtendedWord w;
    for (char c : text) {
        switch (c) {
        case 'x': w.push_back(ExtendedLetter::X); break;
        case 'y': w.push_back(ExtendedLetter::Y); break;
        case 'z': w.push_back(ExtendedLetter::Z); break;
        default:
            throw std::invalid_argument("extended word: unexpected letter '" + std::string(1, c) + "'");
        }
    }
    return w;
}

std::size_t ExtendedWord::z_count() const noexcept {
    std::size_t n = 0;
    for (auto l : letters_) n += l == ExtendedLetter::Z;
    return n;
}

std::string ExtendedWord::to_string() const {
    std::string out;
    out.reserve(letters_.size());
    for (auto l : letters_) out.push_back(to_char(l));
    return out;
}

ExtendedWord operator*(const ExtendedWord& a, const ExtendedWord& b) {
    std::vector<ExtendedLetter> out(a.letters_);
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return ExtendedWord(std::move(out));
}

} // namespace csf
