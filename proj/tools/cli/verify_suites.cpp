#include "verify_suites.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>

#include "cyclicsum/algebra.hpp"
#include "cyclicsum/combinatorics.hpp"
#include "cyclicsum/linalg.hpp"
#include "cyclicsum/operators.hpp"
#include "cyclicsum/parallel.hpp"
#include "cyclicsum/tensor.hpp"

namespace csf::cli {

namespace {

constexpr std::size_t max_reported_failures = 5;

class Collector {
public:
    explicit Collector(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        std::lock_guard lock(mutex_);
        ++result_.cases;
        if (!ok && result_.failures.size() < max_reported_failures) result_.failures.push_back(what);
        if (!ok) failed_ = true;
    }

    SuiteResult finish() {
        if (failed_ && result_.failures.empty()) result_.failures.push_back("failure");
        return std::move(result_);
    }

private:
    std::mutex mutex_;
    SuiteResult result_;
    bool failed_ = false;
};

std::vector<ExtendedWord> all_extended_words(std::size_t max_length) {
    std::vector<ExtendedWord> out{ExtendedWord{}};
    std::vector<ExtendedWord> frontier{ExtendedWord{}};
    for (std::size_t len = 1; len <= max_length; ++len) {
        std::vector<ExtendedWord> next;
        for (const auto& w : frontier)
            for (auto l : {ExtendedLetter::X, ExtendedLetter::Y, ExtendedLetter::Z}) {
                ExtendedWord v = w;
                v.push_back(l);
                next.push_back(v);
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

std::vector<Word> all_words(std::size_t max_length) {
    std::vector<Word> out;
    for (std::size_t len = 0; len <= max_length; ++len)
        for (std::uint64_t bits = 0; bits < (1ULL << len); ++bits) out.push_back(Word::from_bits(bits, len));
    return out;
}

std::size_t capped(int bound, int ceiling) {
    return static_cast<std::size_t>(std::max(0, std::min(bound, ceiling)));
}

// Rewrite x m y in the {y, z} basis of the middle, using x = z - y. Keys spell the middle word.
std::map<std::string, Rational> yz_coordinates(const Poly& p) {
    std::map<std::string, Rational> out;
    for (const auto& [w, c] : p) {
        const Word middle = w.subword(1, w.degree() - 2);
        std::vector<std::size_t> xs;
        for (std::size_t i = 0; i < middle.degree(); ++i)
            if (middle[i] == Letter::X) xs.push_back(i);
        for (std::uint64_t mask = 0; mask < (1ULL << xs.size()); ++mask) {
            std::string text;
            for (std::size_t i = 0; i < middle.degree(); ++i) text += middle[i] == Letter::X ? 'z' : 'y';
            int sign = 1;
            for (std::size_t b = 0; b < xs.size(); ++b)
                if (mask >> b & 1) {
                    text[xs[b]] = 'y';
                    sign = -sign;
                }
            out[text] += sign * c;
        }
    }
    std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
    return out;
}

struct Cell {
    int n;
    int k;
};

std::vector<Cell> grid_cells(int max_sum) {
    std::vector<Cell> cells;
    for (int total = 1; total <= max_sum; ++total)
        for (int n = 0; n < total; ++n) cells.push_back({n, total - n});
    return cells;
}

} // namespace

nlohmann::json to_json(const SuiteResult& r) {
    return {{"name", r.name}, {"cases", r.cases}, {"pass", r.pass()}, {"failures", r.failures}};
}

SuiteResult suite_definition_equivalence(int bound) {
    Collector c("definition_equivalence");
    for (const auto& w : all_extended_words(capped(bound, 6)))
        for (std::size_t n = 0; n <= 3; ++n)
            c.check(m_n(c_n(n, w)) == rho_n_direct(n, w), "n=" + std::to_string(n) + " w=" + w.to_string());
    return c.finish();
}

SuiteResult suite_rho0_equals_rho(int bound) {
    Collector c("rho0_equals_rho");
    for (int k = 1; k <= static_cast<int>(capped(bound, 8)); ++k)
        for (const auto& kappa : enumerate_check_I1(k))
            c.check(rho_n_direct(0, word_from_index(kappa)) == rho_csf(kappa), kappa.to_string());
    return c.finish();
}

SuiteResult suite_shift_law(int bound) {
    Collector c("shift_law");
    for (const auto& w : all_extended_words(capped(bound, 5))) {
        ExtendedWord zw = ExtendedWord{ExtendedLetter::Z} * w;
        for (std::size_t n = 0; n <= 3; ++n)
            c.check(rho_n_direct(n + 1, w) == rho_n_direct(n, zw), "n=" + std::to_string(n) + " w=" + w.to_string());
    }
    return c.finish();
}

SuiteResult suite_rotation_invariance(int bound) {
    Collector c("rotation_invariance");
    for (std::size_t l = 1; l <= capped(bound, 10); ++l) {
        for (std::uint64_t bits = 0; bits < (1ULL << l); ++bits) {
            ZTuple u{bits, l};
            const Poly base = rho_n_direct(0, u.to_extended_word());
            bool ok = true;
            for (std::size_t j = 1; j < l && ok; ++j) ok = rho_n_direct(0, u.rotated(j).to_extended_word()) == base;
            ok = ok && base == rho_tilde0(CyclicWord(u));
            c.check(ok, u.to_string());
        }
    }
    return c.finish();
}

SuiteResult suite_disjoint_supports(int bound) {
    Collector c("disjoint_supports");
    for (std::size_t l = 1; l <= capped(bound, 10); ++l) {
        std::set<std::string> seen;
        for (const auto& cls : necklaces(l, 0)) {
            if (cls.canonical().all_z()) continue;
            const auto support = yz_coordinates(rho_tilde0(cls));
            bool ok = !support.empty();
            for (const auto& [w, coeff] : support) ok = seen.insert(w).second && ok;
            c.check(ok, "l=" + std::to_string(l) + " class=" + cls.to_string());
        }
    }
    return c.finish();
}

SuiteResult suite_diagram_commutes(int bound) {
    Collector c("diagram_commutes");
    for (const auto& w : all_words(capped(bound, 6))) {
        for (std::size_t n = 0; n <= 3; ++n) {
            const Poly bar = rho_bar_n(n, w);
            c.check(d_map(bar) == rho_n_direct(n, w) && rho_bar_n_tensor(n, w) == bar,
                    "n=" + std::to_string(n) + " w=" + w.to_string());
        }
    }
    return c.finish();
}

SuiteResult suite_prop31_identity(int bound) {
    Collector c("prop31_identity");
    for (int weight = 1; weight <= static_cast<int>(capped(bound, 6)); ++weight) {
        for (const auto& k : enumerate_compositions(weight)) {
            const auto l = static_cast<std::ptrdiff_t>(k.depth());
            Poly lhs, rhs;
            for (std::ptrdiff_t j = 0; j < l; ++j) {
                const MultiIndex rot = k.rotated(j);
                lhs += rho_bar_n(0, alpha(d_map(Poly(word_from_index(rot)))));
                const int kj = rot.parts().front();
                for (int i = 1; i <= kj - 1; ++i) {
                    std::vector<int> parts{kj - i + 1};
                    parts.insert(parts.end(), rot.parts().begin() + 1, rot.parts().end());
                    parts.push_back(i);
                    rhs.add_term(word_from_index(MultiIndex(std::move(parts))), 1);
                }
            }
            rhs.add_term(z_word(weight + 1), -weight);
            c.check(lhs == rhs, k.to_string());
        }
    }
    return c.finish();
}

SuiteResult suite_rank_grid(int bound) {
    Collector c("rank_grid");
    const auto cells = grid_cells(static_cast<int>(capped(bound, 12)));
    parallel_for(cells.size(), [&](std::size_t i) {
        const auto [n, k] = cells[i];
        const auto basis = rho_n_span_basis(static_cast<std::size_t>(n), k);
        const auto r = static_cast<std::int64_t>(dim_span(basis));
        const auto f = dim_formula(n, k);
        c.check(r == f, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " rank=" + std::to_string(r) +
                            " formula=" + std::to_string(f));
    });
    return c.finish();
}

SuiteResult suite_stratification(int bound) {
    Collector c("stratification");
    // k is the relation weight; the chain runs over n = 0 .. k-3 plus the degenerate k = 2 stratum.
    for (int k = 2; k <= static_cast<int>(capped(bound, 10)); ++k) {
        if (k == 2) {
            c.check(rho_n_span_basis(0, 1).empty(), "k=2 degenerate stratum");
            continue;
        }
        for (int n = 0; n <= k - 3; ++n) {
            const auto sub = rho_n_span_basis(static_cast<std::size_t>(n + 1), k - n - 2);
            const auto sup = rho_n_span_basis(static_cast<std::size_t>(n), k - n - 1);
            c.check(spans_include(sub, sup), "k=" + std::to_string(k) + " n=" + std::to_string(n));
        }
    }
    return c.finish();
}

SuiteResult suite_star_side_dims(int bound) {
    Collector c("star_side_dims");
    const auto cells = grid_cells(static_cast<int>(capped(bound, 10)));
    parallel_for(cells.size(), [&](std::size_t i) {
        const auto [n, k] = cells[i];
        const auto plain = dim_span(rho_n_span_basis(static_cast<std::size_t>(n), k));
        const auto star = dim_span(rho_bar_n_span_basis(static_cast<std::size_t>(n), k));
        c.check(plain == star, "n=" + std::to_string(n) + " k=" + std::to_string(k));
    });
    return c.finish();
}

std::vector<SuiteResult> run_symbolic_suites(int bound) {
    return {suite_definition_equivalence(bound), suite_rho0_equals_rho(bound), suite_shift_law(bound),
            suite_rotation_invariance(bound),    suite_disjoint_supports(bound), suite_diagram_commutes(bound),
            suite_prop31_identity(bound),        suite_stratification(bound),    suite_star_side_dims(bound),
            suite_rank_grid(bound)};
}

SuiteResult suite_kernel_membership(int max_relation_weight, std::size_t cutoff, double tol, Series series) {
    Collector c("kernel_membership");
    for (int total = 1; total + 1 <= max_relation_weight; ++total) {
        for (int n = 0; n < total; ++n) {
            const int k = total - n;
            for (const auto& p : rho_n_span_basis(static_cast<std::size_t>(n), k)) {
                const auto z = z_numeric(p, cutoff, series);
                c.check(std::abs(z.value) <= tol,
                        "n=" + std::to_string(n) + " k=" + std::to_string(k) + " |Z|=" + std::to_string(std::abs(z.value)));
            }
        }
    }
    return c.finish();
}

SuiteResult suite_star_plain_consistency(int max_weight, std::size_t cutoff) {
    Collector c("star_plain_consistency");
    for (int weight = 2; weight <= max_weight; ++weight) {
        for (const auto& k : enumerate_compositions(weight)) {
            if (!k.admissible()) continue;
            const auto via_d = mzsv(k, cutoff);
            const auto direct = mzsv_nested(k, cutoff);
            c.check(std::abs(via_d.value - direct.value) <= via_d.err + direct.err, k.to_string());
        }
    }
    return c.finish();
}

} // namespace csf::cli
