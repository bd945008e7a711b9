#include <gtest/gtest.h>

#include "cyclicsum/serialize.hpp"

using namespace csf;

TEST(Serialize, PolyShape) {
    Poly p(Word::from_string("xyy"), Rational(1, 2));
    p.add_term(Word::from_string("xxy"), -3);
    const auto j = poly_to_json(p);
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["word"], "xxy");
    EXPECT_EQ(j[0]["num"], "-3");
    EXPECT_EQ(j[0]["den"], "1");
    EXPECT_EQ(j[1]["word"], "xyy");
    EXPECT_EQ(j[1]["num"], "1");
    EXPECT_EQ(j[1]["den"], "2");
    EXPECT_EQ(poly_from_json(j), p);
}

TEST(Serialize, RoundTripKeepsUnitAndBigCoefficients) {
    Poly p = Poly::constant(Rational("123456789012345678901234567890/7"));
    p.add_term(Word::from_string("y"), 1);
    EXPECT_EQ(poly_from_json(nlohmann::json::parse(poly_to_json(p).dump())), p);
    EXPECT_EQ(poly_to_json(Poly()), nlohmann::json::array());
}

TEST(Serialize, RejectsMalformed) {
    EXPECT_THROW(poly_from_json(nlohmann::json::object()), std::invalid_argument);
    EXPECT_THROW(poly_from_json(nlohmann::json::parse(R"([{"word":"xz","num":"1","den":"1"}])")),
                 std::invalid_argument);
    EXPECT_THROW(poly_from_json(nlohmann::json::parse(R"([{"word":"xy","num":"1","den":"0"}])")),
                 std::invalid_argument);
    EXPECT_THROW(poly_from_json(nlohmann::json::parse(R"([{"word":"xy","num":"a","den":"1"}])")),
                 std::invalid_argument);
}

TEST(Serialize, Reports) {
    const CsfReport r{MultiIndex{2, 1}, 1e-9, 2e-9, 1e-4, 1000, true};
    const auto j = report_to_json(r);
    EXPECT_EQ(j["index"], nlohmann::json::array({2, 1}));
    EXPECT_EQ(j["N"], 1000);
    EXPECT_EQ(j["pass"], true);
    const MzsvCsfReport s{MultiIndex{2}, 2.4, 2.4, 0.0, 1e-4, 10, true};
    EXPECT_DOUBLE_EQ(report_to_json(s)["lhs"].get<double>(), 2.4);
    EXPECT_EQ(index_to_json(MultiIndex{4, 2, 1}), nlohmann::json::array({4, 2, 1}));
}
