#include "cyclicsum/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace csf {

MultiIndex::MultiIndex(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("multi-index: empty");
    if (std::any_of(parts_.begin(), parts_.end(), [](int k) { return k < 1; }))
        throw std::invalid_argument("multi-index: parts must be positive");
}

int MultiIndex::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool MultiIndex::in_check_I1() const noexcept {
    return std::any_of(parts_.begin(), parts_.end(), [](int k) { return k != 1; });
}

MultiIndex MultiIndex::rotated(std::ptrdiff_t start) const {
    std::vector<int> out;
    out.reserve(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) out.push_back(cyclic(start + static_cast<std::ptrdiff_t>(i)));
    return MultiIndex(std::move(out));
}

std::string MultiIndex::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

} // namespace csf
