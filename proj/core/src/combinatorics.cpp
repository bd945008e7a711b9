#include "cyclicsum/combinatorics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace csf {

namespace {

std::uint64_t low_mask(std::size_t length) noexcept {
    return length >= 64 ? ~0ULL : (1ULL << length) - 1;
}

void check_length(std::size_t l) {
    if (l == 0 || l > max_necklace_length)
        throw std::invalid_argument("necklace length must be in [1, " + std::to_string(max_necklace_length) + "]");
}

void check_run(std::size_t l, std::size_t n) {
    if (n > l) throw std::invalid_argument("run length exceeds tuple length");
}

} // namespace

ZTuple ZTuple::from_string(std::string_view text) {
    ZTuple u;
    if (text.size() > max_necklace_length) throw std::invalid_argument("tuple too long");
    for (char c : text) {
        if (c != 'y' && c != 'z') throw std::invalid_argument("tuple letters must be y or z");
        u.bits = (u.bits << 1) | (c == 'z' ? 1U : 0U);
        ++u.length;
    }
    return u;
}

std::string ZTuple::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < length; ++i) out.push_back(((bits >> (length - 1 - i)) & 1U) ? 'z' : 'y');
    return out;
}

ExtendedWord ZTuple::to_extended_word() const {
    ExtendedWord w;
    for (std::size_t i = 0; i < length; ++i)
        w.push_back(((bits >> (length - 1 - i)) & 1U) ? ExtendedLetter::Z : ExtendedLetter::Y);
    return w;
}

bool ZTuple::all_z() const noexcept { return bits == low_mask(length); }

ZTuple ZTuple::rotated(std::size_t j) const noexcept {
    if (length == 0) return *this;
    j %= length;
    if (j == 0) return *this;
    std::uint64_t r = ((bits << j) | (bits >> (length - j))) & low_mask(length);
    return ZTuple{r, length};
}

ZTuple canonical_rotation(const ZTuple& u) noexcept {
    ZTuple best = u;
    for (std::size_t j = 1; j < u.length; ++j) {
        ZTuple r = u.rotated(j);
        if (r.bits < best.bits) best = r;
    }
    return best;
}

CyclicWord::CyclicWord(const ZTuple& representative) : canonical_(canonical_rotation(representative)) {
    if (representative.length == 0) throw std::invalid_argument("cyclic word: empty tuple");
}

LucasTable LucasTable::build(int n, int max_m) {
    if (n < 0 || max_m < 1) throw std::invalid_argument("lucas: need n >= 0 and m >= 1");
    if (max_m > 62) throw std::invalid_argument("lucas: m too large for 64-bit values");
    LucasTable t;
    t.n = n;
    t.values.reserve(static_cast<std::size_t>(max_m));
    for (int m = 1; m <= max_m; ++m) {
        std::int64_t v = 0;
        if (n == 0) {
            v = 0;
        } else if (m <= n) {
            v = (std::int64_t{1} << m) - 1;
        } else {
            for (int i = 1; i <= n; ++i) v += t.values[static_cast<std::size_t>(m - i - 1)];
        }
        t.values.push_back(v);
    }
    return t;
}

std::int64_t lucas(int n, int m) { return LucasTable::build(n, m).at(m); }

std::int64_t padovan(int k) {
    if (k < 1) throw std::invalid_argument("padovan: k must be positive");
    std::vector<std::int64_t> d{0, 0, 1, 1}; // d[0] unused
    for (int i = 4; i <= k; ++i) d.push_back(d[static_cast<std::size_t>(i - 2)] + d[static_cast<std::size_t>(i - 3)]);
    return d[static_cast<std::size_t>(k)];
}

std::int64_t totient(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("totient: n must be positive");
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::size_t max_cyclic_z_run(const ZTuple& u) noexcept {
    if (u.all_z()) return u.length;
    // Run detection on the doubled tuple; a run cannot exceed l - 1 once a y is present.
    std::size_t best = 0, run = 0;
    for (std::size_t i = 0; i < 2 * u.length; ++i) {
        std::size_t pos = i % u.length;
        if ((u.bits >> (u.length - 1 - pos)) & 1U) {
            best = std::max(best, ++run);
        } else {
            run = 0;
        }
    }
    return std::min(best, u.length - 1);
}

bool has_cyclic_z_run(const ZTuple& u, std::size_t n) noexcept {
    return n == 0 || max_cyclic_z_run(u) >= n;
}

std::vector<CyclicWord> necklaces(std::size_t l, std::size_t n) {
    check_length(l);
    check_run(l, n);
    std::set<CyclicWord> seen;
    for (std::uint64_t bits = 0; bits <= low_mask(l); ++bits) {
        ZTuple u{bits, l};
        if (has_cyclic_z_run(u, n)) seen.insert(CyclicWord(u));
    }
    return {seen.begin(), seen.end()};
}

std::int64_t count_Y_bruteforce(std::size_t l, std::size_t n) {
    return static_cast<std::int64_t>(necklaces(l, n).size());
}

std::int64_t count_Y_fixed_points(std::size_t l, std::size_t n) {
    check_length(l);
    check_run(l, n);
    std::int64_t fixed = 0;
    for (std::uint64_t bits = 0; bits <= low_mask(l); ++bits) {
        ZTuple u{bits, l};
        if (!has_cyclic_z_run(u, n)) continue;
        for (std::size_t j = 0; j < l; ++j) fixed += u.rotated(j) == u;
    }
    if (fixed % static_cast<std::int64_t>(l) != 0) throw std::logic_error("orbit count: fixed points not divisible by l");
    return fixed / static_cast<std::int64_t>(l);
}

std::int64_t count_Y_formula(std::size_t l, std::size_t n) {
    if (l == 0 || l > 60) throw std::invalid_argument("count_Y_formula: l must be in [1, 60]");
    check_run(l, n);
    const auto length = static_cast<std::int64_t>(l);
    const auto table = LucasTable::build(static_cast<int>(n), static_cast<int>(l));
    std::int64_t sum = 0;
    for (std::int64_t m : divisors(length))
        sum += totient(length / m) * ((std::int64_t{1} << m) - table.at(static_cast<int>(m)));
    if (sum % length != 0)
        throw std::logic_error("count_Y_formula: weighted sum " + std::to_string(sum) + " not divisible by " +
                               std::to_string(length));
    return sum / length;
}

std::int64_t count_Z_bruteforce(std::size_t m, std::size_t n) {
    check_length(m);
    std::int64_t count = 0;
    for (std::uint64_t bits = 0; bits <= low_mask(m); ++bits) {
        ZTuple v{bits, m};
        if (v.all_z()) continue;
        if (max_cyclic_z_run(v) >= n) continue;
        ++count;
    }
    return count;
}

std::int64_t dim_formula(int n, int k) {
    if (n < 0 || k < 1) throw std::invalid_argument("dim_formula: need n >= 0 and k >= 1");
    return count_Y_formula(static_cast<std::size_t>(n + k), static_cast<std::size_t>(n)) - 2;
}

std::int64_t csf_dim_formula(int k) {
    if (k < 2) throw std::invalid_argument("csf_dim_formula: k must be at least 2");
    const std::int64_t l = k - 1;
    std::int64_t sum = 0;
    for (std::int64_t m : divisors(l)) sum += totient(l / m) * (std::int64_t{1} << m);
    if (sum % l != 0) throw std::logic_error("csf_dim_formula: sum not divisible by k - 1");
    return sum / l - 2;
}

} // namespace csf
