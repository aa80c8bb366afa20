#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "residuate/io.hpp"
#include "residuate/residuate.hpp"

using namespace residuate;
using io::Json;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::usage_error;
}

std::string sample(const std::string& name) { return std::string(RESIDUATE_SAMPLES_DIR) + "/" + name; }

}  // namespace

TEST(Json, MatrixRoundTrip) {
  const Json j = Json::parse(R"({"quantale": "max-plus", "rows": ["g1", "g2"], "cols": ["x", "y"],
                                 "entries": [["0", "-inf"], ["3/2", "inf"]]})");
  const QMatrix m = io::matrix_from_json(j);
  EXPECT_EQ(m.quantale(), QuantaleId::max_plus);
  EXPECT_EQ(m.at("g2", "x"), parse_value(QuantaleId::max_plus, "3/2"));
  EXPECT_EQ(m.at("g1", "y"), bottom(QuantaleId::max_plus));
  const Json back = io::to_json(m);
  EXPECT_EQ(back, j);
  EXPECT_EQ(io::matrix_from_json(back), m);
}

TEST(Json, NumbersAreReadExactly) {
  const Json j = Json::parse(R"({"quantale": "max-plus", "rows": ["r"], "cols": ["a", "b", "c"],
                                 "entries": [[0.1, -2, 2.5]]})");
  const QMatrix m = io::matrix_from_json(j);
  EXPECT_EQ(m.at("r", "a").as_extended(), Extended(Rational(1, 10)));
  EXPECT_EQ(m.at("r", "b").as_extended(), Extended(-2));
  EXPECT_EQ(m.at("r", "c").as_extended(), Extended(Rational(5, 2)));
  EXPECT_EQ(io::to_json(m)["entries"][0][0], "1/10");
}

TEST(Json, BooleansAcceptJsonLiterals) {
  const Json j = Json::parse(R"({"quantale": "bool", "rows": ["r"], "cols": ["a", "b"], "entries": [[true, "false"]]})");
  const QMatrix m = io::matrix_from_json(j);
  EXPECT_TRUE(m.at("r", "a").as_bool());
  EXPECT_FALSE(m.at("r", "b").as_bool());
  EXPECT_EQ(io::to_json(m)["entries"][0][0], "true");
}

TEST(Json, DecimalStyle) {
  const QuantaleValue third = QuantaleValue::make(QuantaleId::max_plus, Extended(Rational(1, 3)));
  const Json exact = io::to_json(third);
  const Json lossy = io::to_json(third, io::Style{true});
  EXPECT_EQ(exact, "1/3");
  ASSERT_TRUE(lossy.is_string());
  EXPECT_EQ(lossy.get<std::string>().rfind("0.333", 0), 0U);
  EXPECT_EQ(io::to_json(QuantaleValue::make(QuantaleId::max_plus, Extended::pos_inf()), io::Style{true}), "inf");
}

TEST(Json, MatrixErrors) {
  EXPECT_EQ(code_of([] { io::matrix_from_json(Json::parse(R"([1, 2])")); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([] { io::matrix_from_json(Json::parse(R"({"rows": [], "cols": [], "entries": []})")); }),
            ErrorCode::parse_error);
  EXPECT_EQ(code_of([] {
              io::matrix_from_json(Json::parse(R"({"quantale": "tropical", "rows": [], "cols": [], "entries": []})"));
            }),
            ErrorCode::unknown_quantale);
  EXPECT_EQ(code_of([] {
              io::matrix_from_json(
                  Json::parse(R"({"quantale": "bool", "rows": ["r"], "cols": ["a"], "entries": [["true", "true"]]})"));
            }),
            ErrorCode::shape_mismatch);
  EXPECT_EQ(code_of([] {
              io::matrix_from_json(
                  Json::parse(R"({"quantale": "bool", "rows": ["r", "s"], "cols": ["a"], "entries": [["true"]]})"));
            }),
            ErrorCode::shape_mismatch);
  EXPECT_EQ(code_of([] {
              io::matrix_from_json(
                  Json::parse(R"({"quantale": "lawvere", "rows": ["r"], "cols": ["a"], "entries": [["-1"]]})"));
            }),
            ErrorCode::invalid_value);
  EXPECT_EQ(code_of([] {
              io::matrix_from_json(
                  Json::parse(R"({"quantale": "bool", "rows": ["r", "r"], "cols": ["a"], "entries": [[1], [0]]})"));
            }),
            ErrorCode::duplicate_label);
  EXPECT_EQ(code_of([] {
              io::matrix_from_json(
                  Json::parse(R"({"quantale": "bool", "rows": [3], "cols": ["a"], "entries": [["true"]]})"));
            }),
            ErrorCode::parse_error);
  EXPECT_EQ(code_of([] {
              io::matrix_from_json(
                  Json::parse(R"({"quantale": "bool", "rows": ["r"], "cols": ["a"], "entries": [[null]]})"));
            }),
            ErrorCode::parse_error);
}

TEST(Json, Pairs) {
  const QMatrix z = io::matrix_from_json(io::read_json_file(sample("segment.json")));
  const IsbellPair p = io::pair_from_json(z, io::read_json_file(sample("pair_on.json")));
  EXPECT_TRUE(IsbellHull(z).contains(p));
  const Json j = io::to_json(p);
  EXPECT_EQ(io::pair_from_json(z, j), p);
  Json broken = j;
  broken["Y"]["entries"][0][0] = "7";
  EXPECT_EQ(code_of([&] { io::pair_from_json(z, broken); }), ErrorCode::not_a_member);
}

TEST(Json, HullSerialization) {
  const QMatrix z = io::matrix_from_json(io::read_json_file(sample("antichain.json")));
  const Json h = io::to_json(enumerate_hull(z));
  EXPECT_EQ(h["elements"].size(), 4U);
  EXPECT_EQ(h["covers"], Json::parse("[[0, 1], [0, 2], [1, 3], [2, 3]]"));
  EXPECT_EQ(io::matrix_from_json(h["ambient"]), z);
  EXPECT_THROW(io::to_json(IsbellHull(z)), Error);
}

TEST(Json, QCategories) {
  const QCategory c = io::qcategory_from_json(io::read_json_file(sample("triangle_qcat.json")));
  EXPECT_EQ(c.objects().size(), 3U);
  const Json back = io::to_json(c);
  EXPECT_EQ(back["type"], "qcategory");
  EXPECT_EQ(io::qcategory_from_json(back).matrix(), c.matrix());

  const Json broken = io::read_json_file(sample("broken_qcat.json"));
  EXPECT_FALSE(io::qcategory_check_from_json(broken).category.has_value());
  try {
    io::qcategory_from_json(broken);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_a_category);
    EXPECT_NE(std::string(e.what()).find("CA2"), std::string::npos);
  }
  Json wrong_type = back;
  wrong_type["type"] = "metric";
  EXPECT_EQ(code_of([&] { io::qcategory_from_json(wrong_type); }), ErrorCode::parse_error);
}

TEST(Json, Contexts) {
  const Context ctx = io::context_from_json(io::read_json_file(sample("context.json")));
  EXPECT_EQ(ctx.objects().labels(), (std::vector<std::string>{"frog", "dog", "fish"}));
  EXPECT_EQ(code_of([] { io::context_from_json(Json::parse(R"({"objects": [], "attributes": [], "incidence": []})")); }),
            ErrorCode::parse_error);
  EXPECT_EQ(code_of([] {
              io::context_from_json(Json::parse(
                  R"({"type": "context", "objects": ["o"], "attributes": ["a"], "incidence": [[true, false]]})"));
            }),
            ErrorCode::shape_mismatch);
}

TEST(Json, Metrics) {
  const GeneralizedMetric m = io::metric_from_json(io::read_json_file(sample("metric.json")));
  EXPECT_EQ(m.distance("home", "shop"), Extended(2));
  EXPECT_EQ(m.distance("shop", "home"), Extended(1));
  const Json back = io::to_json(m);
  EXPECT_EQ(io::metric_from_json(back).matrix(), m.matrix());
  EXPECT_EQ(code_of([] {
              io::metric_from_json(Json::parse(R"({"type": "metric", "points": ["a", "b"], "d": [[0, 1], [1, 1]]})"));
            }),
            ErrorCode::not_a_category);
}

TEST(Json, GridFunctions) {
  const GridFunction f = io::grid_function_from_json(io::read_json_file(sample("bump.json")));
  EXPECT_EQ(f.dim(), 1U);
  EXPECT_EQ(f.values(), (std::vector<Extended>{Extended(0), Extended(1), Extended(0)}));
  EXPECT_EQ(io::grid_function_from_json(io::to_json(f)), f);
  EXPECT_EQ(io::grid_from_json(io::read_json_file(sample("dual_grid.json"))).size(), 5U);

  auto with = [](const char* text) { return [text] { io::grid_function_from_json(Json::parse(text)); }; };
  EXPECT_EQ(code_of(with(R"({"type": "grid-fn", "dim": 4, "grid": [[0, 0, 0, 0]], "values": [0]})")),
            ErrorCode::invalid_value);
  EXPECT_EQ(code_of(with(R"({"type": "grid-fn", "dim": 1, "grid": [], "values": []})")), ErrorCode::empty_grid);
  EXPECT_EQ(code_of(with(R"({"type": "grid-fn", "dim": 1, "grid": [["inf"]], "values": [0]})")),
            ErrorCode::invalid_value);
  EXPECT_EQ(code_of(with(R"({"type": "grid-fn", "dim": 1, "grid": [[0]], "values": [0, 1]})")),
            ErrorCode::shape_mismatch);
  EXPECT_EQ(code_of(with(R"({"type": "grid-fn", "dim": 2, "grid": [[0]], "values": [0]})")),
            ErrorCode::dimension_mismatch);
  EXPECT_EQ(code_of(with(R"({"type": "grid-fn", "dim": 1, "grid": [0], "values": [0]})")), ErrorCode::parse_error);
}

TEST(Json, Files) {
  EXPECT_EQ(code_of([] { io::read_json_file(sample("does_not_exist.json")); }), ErrorCode::io_error);
  const auto path = std::filesystem::temp_directory_path() / "residuate_bad.json";
  {
    std::ofstream out(path);
    out << "{\"quantale\": ";
  }
  EXPECT_EQ(code_of([&] { io::read_json_file(path.string()); }), ErrorCode::parse_error);
  std::filesystem::remove(path);
  EXPECT_EQ(io::dump(Json::parse(R"({"a": 1})")), "{\n  \"a\": 1\n}\n");
}
