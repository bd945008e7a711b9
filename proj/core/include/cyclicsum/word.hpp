#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace csf {

/// Generators of Hoffman's algebra. X < Y fixes the canonical word order.
enum class Letter : std::uint8_t { X = 0, Y = 1 };

/// Letters of the extended alphabet; Z stands for the sum x + y.
enum class ExtendedLetter : std::uint8_t { X = 0, Y = 1, Z = 2 };

char to_char(Letter l) noexcept;
char to_char(ExtendedLetter l) noexcept;

/// A monomial over {x, y}: the basis elements of H. The empty word is the unit 1.
///
/// Letters are packed one bit per letter (X = 0, Y = 1) with the first letter in
/// the most significant occupied bit, so for words of equal degree the numeric
/// order of the packed bits is the lexicographic order with X < Y.
class Word {
public:
    static constexpr std::size_t max_degree = 64;

    Word() = default;
    Word(std::initializer_list<Letter> letters);

    /// Parses a string over {'x', 'y'}; throws std::invalid_argument otherwise.
    static Word from_string(std::string_view text);
    static Word from_bits(std::uint64_t bits, std::size_t degree);
    static Word power(Letter l, std::size_t count);

    std::size_t degree() const noexcept { return length_; }
    bool empty() const noexcept { return length_ == 0; }
    std::uint64_t bits() const noexcept { return bits_; }

    Letter operator[](std::size_t i) const noexcept {
        return static_cast<Letter>((bits_ >> (length_ - 1 - i)) & 1U);
    }
    Letter front() const noexcept { return (*this)[0]; }
    Letter back() const noexcept { return static_cast<Letter>(bits_ & 1U); }

    void push_back(Letter l);
    Word subword(std::size_t pos, std::size_t count) const;

    /// Number of Y letters, i.e. the depth of the corresponding multi-index.
    std::size_t y_count() const noexcept;

    bool ends_with_y() const noexcept { return length_ > 0 && back() == Letter::Y; }
    /// Monomial basis of H^0 = Q + xHy: empty, or starts with x and ends with y.
    bool in_h0_basis() const noexcept;
    /// Monomial of the space spanned by words ending in y that are not powers of y.
    bool in_check_h1_basis() const noexcept;

    std::string to_string() const;

    friend Word operator*(const Word& a, const Word& b);

    friend bool operator==(const Word&, const Word&) = default;
    /// Canonical term order: by degree, then lexicographic with X < Y.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
        if (auto c = a.length_ <=> b.length_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    std::uint64_t bits_ = 0;
    std::uint8_t length_ = 0;
};

/// A word over {x, y, z}. Only ever expanded, never stored in a Poly.
class ExtendedWord {
public:
    ExtendedWord() = default;
    ExtendedWord(std::initializer_list<ExtendedLetter> letters) : letters_(letters) {}
    explicit ExtendedWord(std::vector<ExtendedLetter> letters) : letters_(std::move(letters)) {}
    explicit ExtendedWord(const Word& w);

    static ExtendedWord from_string(std::string_view text);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    ExtendedLetter operator[](std::size_t i) const noexcept { return letters_[i]; }
    const std::vector<ExtendedLetter>& letters() const noexcept { return letters_; }
    std::size_t z_count() const noexcept;

    void push_back(ExtendedLetter l) { letters_.push_back(l); }
    std::string to_string() const;

    friend ExtendedWord operator*(const ExtendedWord& a, const ExtendedWord& b);
    friend bool operator==(const ExtendedWord&, const ExtendedWord&) = default;

private:
    std::vector<ExtendedLetter> letters_;
};

} // namespace csf

template <>
struct std::hash<csf::Word> {
    std::size_t operator()(const csf::Word& w) const noexcept {
        return std::hash<std::uint64_t>{}(w.bits() * 0x9E3779B97F4A7C15ULL ^ w.degree());
    }
};
