#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli/commands.hpp"
#include "cli/verify_suites.hpp"

using namespace csf::cli;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

RunConfig config(Command c) {
    RunConfig cfg;
    cfg.command = c;
    return cfg;
}

void expect_clean_tsv(const std::string& text) {
    EXPECT_EQ(text.find('\r'), std::string::npos);
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
        if (line.empty()) continue;
        EXPECT_NE(line.back(), ' ') << line;
        EXPECT_NE(line.back(), '\t') << line;
    }
}

} // namespace

TEST(Cli, ParseCommandNames) {
    for (auto c : {Command::tables, Command::dims, Command::necklaces, Command::lucas, Command::verify_sym,
                   Command::verify_num})
        EXPECT_EQ(parse_command(command_name(c)), c);
    EXPECT_FALSE(parse_command("plot").has_value());
}

TEST(Cli, TablesMatchReferenceFixture) {
    const auto out = cmd_tables(config(Command::tables));
    EXPECT_EQ(out.exit_code, 0);
    EXPECT_EQ(out.text, read_file(CYCLICSUM_FIXTURE_DIR "/tables.tsv"));
    expect_clean_tsv(out.text);
}

TEST(Cli, TablesJsonCarriesProvenance) {
    auto cfg = config(Command::tables);
    cfg.format = Format::json;
    const auto j = nlohmann::json::parse(cmd_tables(cfg).text);
    ASSERT_EQ(j["tables"].size(), 3u);
    EXPECT_EQ(j["tables"][1]["rows"][1]["oracle"], "exact_rank");
    EXPECT_EQ(j["tables"][1]["rows"][1]["values"], nlohmann::json({0, 1, 2, 4, 6, 12, 18, 34, 58}));
    EXPECT_EQ(j["tables"][2]["rows"][4]["values"], nlohmann::json({1, 3, 7, 15, 31, 57, 113}));
}

TEST(Cli, DimsGrid) {
    auto cfg = config(Command::dims);
    cfg.max_weight = 6;
    const auto out = cmd_dims(cfg);
    EXPECT_EQ(out.exit_code, 0);
    EXPECT_NE(out.text.find("0\t1\t2\t0\t0\tyes\n"), std::string::npos);
    EXPECT_EQ(out.text.find("\tno\n"), std::string::npos);
    expect_clean_tsv(out.text);

    cfg.n = 2;
    cfg.format = Format::json;
    const auto j = nlohmann::json::parse(cmd_dims(cfg).text);
    for (const auto& cell : j["cells"]) {
        EXPECT_EQ(cell["n"], 2);
        EXPECT_EQ(cell["formula"], cell["rank"]);
    }
}

TEST(Cli, DimsRowZeroIsTable2Shifted) {
    auto cfg = config(Command::dims);
    cfg.max_weight = 9;
    cfg.n = 0;
    cfg.format = Format::json;
    const auto j = nlohmann::json::parse(cmd_dims(cfg).text);
    const std::vector<int> table2 = {0, 1, 2, 4, 6, 12, 18, 34, 58};
    ASSERT_EQ(j["cells"].size(), 9u);
    for (std::size_t i = 0; i < 9; ++i) {
        EXPECT_EQ(j["cells"][i]["relation_weight"], static_cast<int>(i) + 2);
        EXPECT_EQ(j["cells"][i]["rank"], table2[i]);
    }
}

TEST(Cli, Caps) {
    auto cfg = config(Command::dims);
    cfg.max_weight = 13;
    EXPECT_THROW(run(cfg), UsageError);
    cfg = config(Command::verify_num);
    cfg.max_weight = 7;
    EXPECT_THROW(run(cfg), UsageError);
    cfg = config(Command::necklaces);
    cfg.l = 17;
    EXPECT_THROW(run(cfg), UsageError);
    cfg.l = 4;
    cfg.n = 5;
    EXPECT_THROW(run(cfg), UsageError);
    cfg = config(Command::verify_sym);
    cfg.max_weight = 13;
    EXPECT_THROW(run(cfg), UsageError);
}

TEST(Cli, Necklaces) {
    auto cfg = config(Command::necklaces);
    cfg.l = 4;
    cfg.n = 2;
    const auto out = cmd_necklaces(cfg);
    EXPECT_EQ(out.exit_code, 0);
    EXPECT_EQ(out.text, "l\tn\tbruteforce\tformula\tmatch\n4\t2\t3\t3\tyes\n\nclass\nyyzz\nyzzz\nzzzz\n");
    cfg.n = 0;
    cfg.format = Format::json;
    EXPECT_EQ(nlohmann::json::parse(cmd_necklaces(cfg).text)["classes"].size(), 6u);
    cfg.l = 1;
    cfg.n = 1;
    EXPECT_EQ(nlohmann::json::parse(cmd_necklaces(cfg).text)["classes"], nlohmann::json({"z"}));
}

TEST(Cli, Lucas) {
    const auto out = cmd_lucas(config(Command::lucas));
    EXPECT_NE(out.text.find("5\t1\t3\t7\t15\t31\t57\t113\n"), std::string::npos);
    EXPECT_NE(out.text.find("0\t0\t0\t0\t0\t0\t0\t0\n"), std::string::npos);
    expect_clean_tsv(out.text);
}

TEST(Cli, VerifySymSmallBound) {
    auto cfg = config(Command::verify_sym);
    cfg.max_weight = 4;
    cfg.format = Format::json;
    const auto out = cmd_verify_sym(cfg);
    EXPECT_EQ(out.exit_code, 0);
    const auto j = nlohmann::json::parse(out.text);
    EXPECT_TRUE(j["pass"]);
    EXPECT_EQ(j["suites"].size(), 10u);
}

TEST(Cli, Prop31SuiteCoversAllCompositions) {
    const auto r = suite_prop31_identity(6);
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.cases, 63u);
    EXPECT_EQ(suite_prop31_identity(4).cases, 15u);
}

TEST(Cli, StratificationIncludesDegenerateStratum) {
    const auto r = suite_stratification(3);
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.cases, 2u);
}

TEST(Cli, VerifyNum) {
    auto cfg = config(Command::verify_num);
    cfg.max_weight = 4;
    const auto out = cmd_verify_num(cfg);
    EXPECT_EQ(out.exit_code, 0);
    EXPECT_EQ(out.text.find("\tno\n"), std::string::npos);
    expect_clean_tsv(out.text);

    cfg.series = csf::Series::nested;
    EXPECT_EQ(cmd_verify_num(cfg).exit_code, 1);
}
