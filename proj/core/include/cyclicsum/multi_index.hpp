#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace csf {

/// A multi-index (k_1, ..., k_l) of positive integers.
class MultiIndex {
public:
    /// Throws std::invalid_argument on an empty sequence or a non-positive part.
    explicit MultiIndex(std::vector<int> parts);
    MultiIndex(std::initializer_list<int> parts) : MultiIndex(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept;
    std::size_t depth() const noexcept { return parts_.size(); }

    /// k_1 >= 2, i.e. the MZV series converges.
    bool admissible() const noexcept { return parts_.front() >= 2; }
    /// Not all parts equal to 1.
    bool in_check_I1() const noexcept;

    /// k_j with the index taken cyclically (0-based): cyclic(j) == cyclic(j + depth()).
    int cyclic(std::ptrdiff_t j) const noexcept {
        auto l = static_cast<std::ptrdiff_t>(parts_.size());
        auto r = j % l;
        return parts_[static_cast<std::size_t>(r < 0 ? r + l : r)];
    }

    /// The rotation (k_{s+1}, ..., k_{s+l}) (0-based start s).
    MultiIndex rotated(std::ptrdiff_t start) const;

    /// "(4,2,1)".
    std::string to_string() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<int> parts_;
};

} // namespace csf
