#include <gtest/gtest.h>

#include "report_io.hpp"
#include "resint/errors.hpp"

using namespace resint;
using namespace resint::cli;

TEST(ReportIo, Formats) {
  EXPECT_EQ(parse_format("json"), Format::json);
  EXPECT_EQ(parse_format("csv"), Format::csv);
  EXPECT_EQ(parse_format("table"), Format::table);
  EXPECT_THROW(parse_format("xml"), ValidationError);
}

TEST(ReportIo, Integers) {
  EXPECT_EQ(integer_to_json(Integer(42)), 42);
  const Integer big = Integer(1) << 80;
  EXPECT_TRUE(integer_to_json(big).is_string());
  EXPECT_EQ(integer_from_json(integer_to_json(big)), big);
  EXPECT_EQ(integer_from_json(integer_to_json(Integer(-7))), -7);
  EXPECT_THROW(integer_from_json(nlohmann::ordered_json("12x")), ParseError);
  EXPECT_TRUE(degree_to_json(std::nullopt).is_null());
  EXPECT_FALSE(degree_from_json(nullptr).has_value());
  EXPECT_EQ(degree_cell(Integer(3297280)), "3,297,280");
  EXPECT_EQ(degree_cell(Integer(-1120)), "-1,120");
  EXPECT_EQ(degree_cell(std::nullopt), "-");
}

TEST(ReportIo, JsonRoundTrip) {
  for (auto [r, n, d] : {std::tuple{1, 3, 3}, {1, 4, 5}, {2, 7, 4}, {1, 5, 3}}) {
    const GrassContext g(r, n);
    for (const auto& [a, b] : enumerate_degenerations(d)) {
      const auto rep = decompose_degeneration(DegenerationSpec(g, d, a, b));
      EXPECT_EQ(report_from_json(report_to_json(rep)), rep);
    }
  }
  const GrassContext g(1, 5);
  const auto paired = decompose_degeneration(DegenerationSpec(g, 3, {1, 1}, {1, 2}), Partition({4}));
  EXPECT_EQ(report_from_json(report_to_json(paired)), paired);
}

TEST(ReportIo, MalformedJson) {
  const auto good = report_to_json(decompose_degeneration(DegenerationSpec(GrassContext(1, 3), 3, {1, 1}, {1, 2})));
  auto bad = good;
  bad.erase("context");
  EXPECT_THROW(report_from_json(bad), ParseError);
  bad = good;
  bad["pieces"][0]["main_class"] = "x +* y";
  EXPECT_THROW(report_from_json(bad), ParseError);
  bad = good;
  bad["pieces"] = nlohmann::ordered_json::array();
  EXPECT_THROW(report_from_json(bad), ParseError);
}

TEST(ReportIo, CsvAndTable) {
  EXPECT_EQ(csv_field("abc"), "abc");
  EXPECT_EQ(csv_field("a b"), "\"a b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  const auto rep = decompose_degeneration(DegenerationSpec(GrassContext(1, 3), 3, {1, 1}, {1, 2}));
  const auto rows = report_csv_rows(rep);
  EXPECT_EQ(std::count(rows.begin(), rows.end(), '\n'), 3);
  EXPECT_NE(report_table(rep, false).find("27"), std::string::npos);
  EXPECT_NE(report_table(rep, true).find("6*x^2*y - 3*y^2"), std::string::npos);
}
