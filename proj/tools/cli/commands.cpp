#include "commands.hpp"

#include <cstdint>
#include <functional>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "cyclicsum/algebra.hpp"
#include "cyclicsum/combinatorics.hpp"
#include "cyclicsum/linalg.hpp"
#include "cyclicsum/operators.hpp"
#include "cyclicsum/parallel.hpp"
#include "cyclicsum/serialize.hpp"
#include "verify_suites.hpp"

namespace csf::cli {

namespace {

using nlohmann::json;

int checked(const std::optional<int>& value, int fallback, int lo, int hi, const char* flag) {
    const int v = value.value_or(fallback);
    if (v < lo || v > hi)
        throw UsageError(std::string(flag) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         "], got " + std::to_string(v));
    return v;
}

void check_numeric_args(const RunConfig& cfg) {
    if (cfg.cutoff < 16) throw UsageError("--cutoff must be at least 16");
    if (!(cfg.tol > 0.0)) throw UsageError("--tol must be positive");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// One table row: label, computed cells, OEIS number, and which routine produced the cells.
struct TableRow {
    std::string label;
    std::vector<std::int64_t> values;
    std::string sequence;
    std::string oracle;
};

struct Table {
    std::string name;
    std::string caption;
    std::string header; // first column header
    std::vector<int> columns;
    std::vector<TableRow> rows;
};

void append_tsv(std::ostringstream& out, const Table& t) {
    out << "# " << t.name << ": " << t.caption << '\n' << t.header;
    for (int c : t.columns) out << '\t' << c;
    out << "\tsequence\n";
    for (const auto& r : t.rows) {
        out << r.label;
        for (auto v : r.values) out << '\t' << v;
        out << '\t' << r.sequence << '\n';
    }
}

json table_json(const Table& t) {
    json rows = json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"label", r.label}, {"values", r.values}, {"sequence", r.sequence}, {"oracle", r.oracle}});
    return {{"name", t.name}, {"caption", t.caption}, {"header", t.header}, {"columns", t.columns}, {"rows", rows}};
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

std::vector<std::int64_t> map_columns(const std::vector<int>& cols, const std::function<std::int64_t(int)>& f) {
    std::vector<std::int64_t> v;
    for (int c : cols) v.push_back(f(c));
    return v;
}

std::string suite_tsv(const std::vector<SuiteResult>& suites) {
    std::ostringstream out;
    out << "suite\tcases\tpass\tfirst_failure\n";
    for (const auto& s : suites)
        out << s.name << '\t' << s.cases << '\t' << (s.pass() ? "yes" : "no") << '\t'
            << (s.failures.empty() ? "-" : s.failures.front()) << '\n';
    return out.str();
}

std::string_view series_name(Series s) { return s == Series::nested ? "nested" : "half_split"; }

} // namespace

std::optional<Command> parse_command(std::string_view name) {
    if (name == "tables") return Command::tables;
    if (name == "dims") return Command::dims;
    if (name == "necklaces") return Command::necklaces;
    if (name == "lucas") return Command::lucas;
    if (name == "verify-sym") return Command::verify_sym;
    if (name == "verify-num") return Command::verify_num;
    return std::nullopt;
}

std::string_view command_name(Command c) {
    switch (c) {
    case Command::tables: return "tables";
    case Command::dims: return "dims";
    case Command::necklaces: return "necklaces";
    case Command::lucas: return "lucas";
    case Command::verify_sym: return "verify-sym";
    case Command::verify_num: return "verify-num";
    }
    return "?";
}

CommandOutput cmd_tables(const RunConfig& cfg) {
    const auto ks = range(2, 10);
    auto pow2 = [](int k) { return std::int64_t{1} << (k - 2); };

    Table t1{"table1", "dimensions concerning Z on H0_k", "k", ks, {}};
    t1.rows.push_back({"2^(k-2)", map_columns(ks, pow2), "A000079", "power_of_two"});
    t1.rows.push_back({"d_k", map_columns(ks, padovan), "A000931", "padovan"});
    t1.rows.push_back(
        {"2^(k-2)-d_k", map_columns(ks, [&](int k) { return pow2(k) - padovan(k); }), "A038360", "power_of_two-padovan"});

    // The rho row is indexed by the relation weight k and spans rho over the degree k-1 part.
    std::vector<std::int64_t> ranks(ks.size());
    parallel_for(ks.size(), [&](std::size_t i) {
        ranks[i] = static_cast<std::int64_t>(dim_span(rho_n_span_basis(0, ks[i] - 1)));
    });
    bool agree = true;
    for (std::size_t i = 0; i < ks.size(); ++i) agree = agree && ranks[i] == csf_dim_formula(ks[i]);

    Table t2{"table2", "dimensions concerning the cyclic sum formula", "k", ks, {}};
    t2.rows.push_back(t1.rows[2]);
    t2.rows.push_back({"dim rho(H1_{k-1})", ranks, "A052823", "exact_rank"});

    const auto ms = range(1, 7);
    Table t3{"table3", "n-step Lucas sequences", "m", ms, {}};
    const char* oeis[] = {"A000012", "A000032,A000204", "A001644", "A073817,A001648", "A074048,A023424"};
    for (int n = 1; n <= 5; ++n) {
        const auto table = LucasTable::build(n, 7);
        t3.rows.push_back({"L^" + std::to_string(n) + "_m", map_columns(ms, [&](int m) { return table.at(m); }),
                           oeis[n - 1], "lucas_recurrence"});
    }

    CommandOutput result;
    result.exit_code = agree ? 0 : 1;
    if (cfg.format == Format::json) {
        result.text = dump({{"tables", {table_json(t1), table_json(t2), table_json(t3)}},
                            {"rank_matches_closed_formula", agree}});
    } else {
        std::ostringstream out;
        append_tsv(out, t1);
        out << '\n';
        append_tsv(out, t2);
        out << '\n';
        append_tsv(out, t3);
        result.text = out.str();
    }
    return result;
}

CommandOutput cmd_dims(const RunConfig& cfg) {
    const int max_sum = checked(cfg.max_weight, 10, 1, rank_cap, "--max-weight");
    if (cfg.n) checked(cfg.n, 0, 0, max_sum - 1, "--n");

    struct Cell {
        int n, k;
        std::int64_t formula = 0, rank = 0;
    };
    std::vector<Cell> cells;
    for (int n = 0; n < max_sum; ++n) {
        if (cfg.n && *cfg.n != n) continue;
        for (int k = 1; n + k <= max_sum; ++k) cells.push_back({n, k});
    }
    parallel_for(cells.size(), [&](std::size_t i) {
        auto& c = cells[i];
        c.formula = dim_formula(c.n, c.k);
        c.rank = static_cast<std::int64_t>(dim_span(rho_n_span_basis(static_cast<std::size_t>(c.n), c.k)));
    });

    bool all = true;
    for (const auto& c : cells) all = all && c.formula == c.rank;

    CommandOutput result;
    result.exit_code = all ? 0 : 1;
    if (cfg.format == Format::json) {
        json rows = json::array();
        for (const auto& c : cells)
            rows.push_back({{"n", c.n},
                            {"k", c.k},
                            {"relation_weight", c.n + c.k + 1},
                            {"formula", c.formula},
                            {"rank", c.rank},
                            {"match", c.formula == c.rank}});
        result.text = dump({{"cells", rows},
                            {"formula_oracle", "necklace_closed_formula"},
                            {"rank_oracle", "exact_rank"},
                            {"pass", all}});
    } else {
        std::ostringstream out;
        out << "n\tk\trelation_weight\tformula\trank\tmatch\n";
        for (const auto& c : cells)
            out << c.n << '\t' << c.k << '\t' << c.n + c.k + 1 << '\t' << c.formula << '\t' << c.rank << '\t'
                << (c.formula == c.rank ? "yes" : "no") << '\n';
        result.text = out.str();
    }
    return result;
}

CommandOutput cmd_necklaces(const RunConfig& cfg) {
    const int l = checked(cfg.l, 4, 1, combinatorial_cap, "--l");
    const int n = checked(cfg.n, 0, 0, l, "--n");
    const auto classes = necklaces(static_cast<std::size_t>(l), static_cast<std::size_t>(n));
    const auto brute = static_cast<std::int64_t>(classes.size());
    const auto formula = count_Y_formula(static_cast<std::size_t>(l), static_cast<std::size_t>(n));

    CommandOutput result;
    result.exit_code = brute == formula ? 0 : 1;
    if (cfg.format == Format::json) {
        std::vector<std::string> names;
        for (const auto& c : classes) names.push_back(c.to_string());
        result.text = dump({{"l", l},
                            {"n", n},
                            {"bruteforce", brute},
                            {"formula", formula},
                            {"match", brute == formula},
                            {"classes", names}});
    } else {
        std::ostringstream out;
        out << "l\tn\tbruteforce\tformula\tmatch\n"
            << l << '\t' << n << '\t' << brute << '\t' << formula << '\t' << (brute == formula ? "yes" : "no")
            << "\n\nclass\n";
        for (const auto& c : classes) out << c.to_string() << '\n';
        result.text = out.str();
    }
    return result;
}

CommandOutput cmd_lucas(const RunConfig& cfg) {
    const int max_n = checked(cfg.n, 5, 0, combinatorial_cap, "--n");
    const int max_m = checked(cfg.max_weight, 7, 1, combinatorial_cap, "--max-weight");
    const auto ms = range(1, max_m);

    CommandOutput result;
    if (cfg.format == Format::json) {
        json rows = json::array();
        for (int n = 0; n <= max_n; ++n) rows.push_back({{"n", n}, {"values", LucasTable::build(n, max_m).values}});
        result.text = dump({{"m", ms}, {"rows", rows}, {"oracle", "lucas_recurrence"}});
    } else {
        std::ostringstream out;
        out << "n";
        for (int m : ms) out << "\tm=" << m;
        out << '\n';
        for (int n = 0; n <= max_n; ++n) {
            out << n;
            for (auto v : LucasTable::build(n, max_m).values) out << '\t' << v;
            out << '\n';
        }
        result.text = out.str();
    }
    return result;
}

CommandOutput cmd_verify_sym(const RunConfig& cfg) {
    const int bound = checked(cfg.max_weight, 10, 1, rank_cap, "--max-weight");
    const auto suites = run_symbolic_suites(bound);
    bool all = true;
    for (const auto& s : suites) all = all && s.pass();

    CommandOutput result;
    result.exit_code = all ? 0 : 1;
    if (cfg.format == Format::json) {
        json list = json::array();
        for (const auto& s : suites) list.push_back(to_json(s));
        result.text = dump({{"max_weight", bound}, {"suites", list}, {"pass", all}});
    } else {
        result.text = suite_tsv(suites);
    }
    return result;
}

CommandOutput cmd_verify_num(const RunConfig& cfg) {
    const int max_weight = checked(cfg.max_weight, 5, 2, numeric_cap, "--max-weight");
    check_numeric_args(cfg);

    std::vector<MultiIndex> indices;
    for (int w = 2; w <= max_weight; ++w)
        for (auto& k : enumerate_check_I1(w)) indices.push_back(std::move(k));

    std::vector<std::optional<CsfReport>> csf_slots(indices.size());
    std::vector<std::optional<MzsvCsfReport>> star_slots(indices.size());
    parallel_for(indices.size(), [&](std::size_t i) {
        csf_slots[i] = check_csf_numeric(indices[i], cfg.cutoff, cfg.tol, cfg.series);
        star_slots[i] = check_mzsv_csf(indices[i], cfg.cutoff, cfg.tol, cfg.series);
    });
    std::vector<CsfReport> csf;
    std::vector<MzsvCsfReport> star;
    for (auto& r : csf_slots) csf.push_back(std::move(*r));
    for (auto& r : star_slots) star.push_back(std::move(*r));
    const std::vector<SuiteResult> suites{
        suite_kernel_membership(max_weight + 1, cfg.cutoff, cfg.tol, cfg.series),
        suite_star_plain_consistency(max_weight, cfg.cutoff)};

    bool all = true;
    for (const auto& r : csf) all = all && r.pass;
    for (const auto& r : star) all = all && r.pass;
    for (const auto& s : suites) all = all && s.pass();

    CommandOutput result;
    result.exit_code = all ? 0 : 1;
    if (cfg.format == Format::json) {
        json a = json::array(), b = json::array(), s = json::array();
        for (const auto& r : csf) a.push_back(report_to_json(r));
        for (const auto& r : star) b.push_back(report_to_json(r));
        for (const auto& r : suites) s.push_back(to_json(r));
        result.text = dump({{"max_weight", max_weight},
                            {"series", series_name(cfg.series)},
                            {"csf", a},
                            {"mzsv_csf", b},
                            {"suites", s},
                            {"pass", all}});
    } else {
        std::ostringstream out;
        out.precision(3);
        out << std::scientific;
        out << "relation\tindex\tresidual\terr\ttol\tN\tpass\n";
        for (const auto& r : csf)
            out << "csf\t" << r.index.to_string() << '\t' << r.residual << '\t' << r.err << '\t' << r.tol << '\t'
                << r.cutoff << '\t' << (r.pass ? "yes" : "no") << '\n';
        for (const auto& r : star)
            out << "mzsv_csf\t" << r.index.to_string() << '\t' << r.residual << "\t-\t" << r.tol << '\t' << r.cutoff
                << '\t' << (r.pass ? "yes" : "no") << '\n';
        out << '\n' << suite_tsv(suites);
        result.text = out.str();
    }
    return result;
}

CommandOutput run(const RunConfig& cfg) {
    switch (cfg.command) {
    case Command::tables: return cmd_tables(cfg);
    case Command::dims: return cmd_dims(cfg);
    case Command::necklaces: return cmd_necklaces(cfg);
    case Command::lucas: return cmd_lucas(cfg);
    case Command::verify_sym: return cmd_verify_sym(cfg);
    case Command::verify_num: return cmd_verify_num(cfg);
    }
    throw UsageError("unknown command");
}

} // namespace csf::cli
