#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cyclicsum/word.hpp"

namespace csf {

/// Largest tuple length accepted by the necklace routines.
inline constexpr std::size_t max_necklace_length = 32;

/// A tuple over {y, z} packed one bit per letter (Y = 0, Z = 1), first letter in
/// the most significant occupied bit, so lexicographic order with Y < Z is numeric order.
struct ZTuple {
    std::uint64_t bits = 0;
    std::size_t length = 0;

    static ZTuple from_string(std::string_view text);
    std::string to_string() const;
    ExtendedWord to_extended_word() const;
    bool all_z() const noexcept;

    /// j(u_1, ..., u_l) = (u_{j+1}, ..., u_{j+l}).
    ZTuple rotated(std::size_t j) const noexcept;

    friend bool operator==(const ZTuple&, const ZTuple&) = default;
};

/// Rotation class of a {y, z}-tuple, stored as its lexicographically minimal rotation.
class CyclicWord {
public:
    explicit CyclicWord(const ZTuple& representative);
    static CyclicWord from_string(std::string_view text) { return CyclicWord(ZTuple::from_string(text)); }

    const ZTuple& canonical() const noexcept { return canonical_; }
    std::size_t length() const noexcept { return canonical_.length; }
    std::string to_string() const { return canonical_.to_string(); }

    friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
    friend auto operator<=>(const CyclicWord& a, const CyclicWord& b) noexcept {
        if (auto c = a.canonical_.length <=> b.canonical_.length; c != 0) return c;
        return a.canonical_.bits <=> b.canonical_.bits;
    }

private:
    ZTuple canonical_;
};

/// Minimal rotation by comparing all l rotations.
ZTuple canonical_rotation(const ZTuple& u) noexcept;

/// The n-step Lucas numbers L^n_1 .. L^n_max_m:
/// L^n_m = 2^m - 1 for m <= n, L^n_m = L^n_{m-1} + ... + L^n_{m-n} afterwards, and L^0_m = 0.
struct LucasTable {
    int n = 0;
    std::vector<std::int64_t> values; // values[m - 1] = L^n_m

    static LucasTable build(int n, int max_m);
    std::int64_t at(int m) const { return values.at(static_cast<std::size_t>(m - 1)); }
};

std::int64_t lucas(int n, int m);

/// d_1 = 0, d_2 = d_3 = 1, d_k = d_{k-2} + d_{k-3}.
std::int64_t padovan(int k);

std::int64_t totient(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);

/// Longest cyclic run of z's; equals the length for the all-z tuple.
std::size_t max_cyclic_z_run(const ZTuple& u) noexcept;

/// Some cyclic window of n letters is all z (vacuous for n = 0).
bool has_cyclic_z_run(const ZTuple& u, std::size_t n) noexcept;

/// Canonical representatives of the rotation classes of tuples of length l with a
/// cyclic run of at least n z's, in increasing canonical order.
std::vector<CyclicWord> necklaces(std::size_t l, std::size_t n);

/// Number of those classes, by counting distinct canonical forms over all 2^l tuples.
std::int64_t count_Y_bruteforce(std::size_t l, std::size_t n);

/// Same number, by averaging fixed points of every rotation (orbit counting).
std::int64_t count_Y_fixed_points(std::size_t l, std::size_t n);

/// (1/l) sum_{m | l} phi(l/m) (2^m - L^n_m). Throws std::logic_error if the sum is not divisible by l.
std::int64_t count_Y_formula(std::size_t l, std::size_t n);

/// #{ v in {y,z}^m : the periodic repetition of v has no n consecutive z's }.
std::int64_t count_Z_bruteforce(std::size_t m, std::size_t n);

/// Closed-form dimension of rho_n applied to the weight-k span: count_Y_formula(n + k, n) - 2.
std::int64_t dim_formula(int n, int k);

/// Dimension of the weight-k cyclic-sum relations: (1/(k-1)) sum_{m | k-1} phi((k-1)/m) 2^m - 2, k >= 2.
std::int64_t csf_dim_formula(int k);

} // namespace csf
