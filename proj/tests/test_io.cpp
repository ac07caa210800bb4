#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "szq/error.hpp"
#include "szq/io.hpp"

using namespace szq;

namespace {

class TempFile {
 public:
  TempFile(const std::string& name, const std::string& content)
      : path_(std::filesystem::temp_directory_path() / ("szq_io_" + name)) {
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  [[nodiscard]] std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Parse, ComplexLiterals) {
  EXPECT_EQ(parse_complex("0.5"), Complex(0.5, 0.0));
  EXPECT_EQ(parse_complex(" 0.1,-0.2 "), Complex(0.1, -0.2));
  const auto list = parse_complex_list("0.1,0;0,-0.2");
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(list[1], Complex(0.0, -0.2));
  EXPECT_TRUE(parse_complex_list("").empty());
  EXPECT_EQ(code_of([] { (void)parse_complex("abc"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { (void)parse_complex("1,2,3"); }), ErrorCode::Parse);
}

TEST(Parse, MeasureSpecs) {
  EXPECT_EQ(parse_measure("lebesgue").id(), "lebesgue");
  EXPECT_EQ(parse_measure("bernstein-szego:0.5").id(), "bernstein-szego:0.5");
  EXPECT_NEAR(std::abs(moments(parse_measure("bernstein-szego:0.5"), 2)[2] - 0.25), 0.0, 1e-16);
  EXPECT_TRUE(has_density(parse_measure("geronimus:-0.2,0.1")));
  EXPECT_EQ(verblunsky(parse_measure("verblunsky:0.1;0.2,0.3"), 3)[1], Complex(0.2, 0.3));
  EXPECT_EQ(code_of([] { (void)parse_measure("uniform"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { (void)parse_measure("moments:/nonexistent/szq.txt"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { (void)parse_measure("bernstein-szego"); }), ErrorCode::Parse);
}

TEST(Files, Moments) {
  const TempFile f("moments.txt", "# c_k\n1 0\n0.5 0.25\n\n0.1\n");
  const auto c = read_moment_file(f.str());
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[1], Complex(0.5, 0.25));
  EXPECT_EQ(c[2], Complex(0.1, 0.0));
  const MeasureSpec m = parse_measure("moments:" + f.str());
  EXPECT_FALSE(has_density(m));

  const TempFile bad("bad_moments.txt", "1 0 3\n");
  EXPECT_EQ(code_of([&] { (void)read_moment_file(bad.str()); }), ErrorCode::Parse);
}

TEST(Files, Density) {
  const TempFile f("density.txt", "4\n1\n2\n1\n0.5\n");
  EXPECT_EQ(read_density_file(f.str()).size(), 4u);
  const MeasureSpec m = parse_measure("density:" + f.str());
  EXPECT_TRUE(has_density(m));
  EXPECT_NEAR(moments(m, 1)[0].real(), 1.0, 1e-16);

  const TempFile short_file("density_short.txt", "5\n1\n2\n");
  EXPECT_EQ(code_of([&] { (void)read_density_file(short_file.str()); }), ErrorCode::Parse);
}

TEST(Files, IntervalMoments) {
  const TempFile f("interval.txt", "1\n0\n0.5\n0\n0.375\n");
  const auto pm = read_interval_moment_file(f.str());
  ASSERT_EQ(pm.size(), 5u);
  // Chebyshev weight: all circle moments past c_0 vanish.
  const MomentSequence c = moments(parse_measure("interval-moments:" + f.str()), 4);
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_LT(std::abs(c[k]), 1e-15);
}

TEST(Files, RuleJsonAndCsv) {
  const TempFile js("rule.json", R"({"n": 2, "m": 0, "eta": 0, "nodes": [1.5, 4.5], "weights": [0.5, 0.5], "measure": "lebesgue"})");
  const RuleFile a = read_rule_file(js.str());
  EXPECT_EQ(a.nodes.size(), 2u);
  ASSERT_TRUE(a.m.has_value());
  EXPECT_EQ(*a.m, 0u);
  EXPECT_EQ(a.measure_id, "lebesgue");

  const TempFile csv("rule.csv", "node_rad,weight\n1.5,0.5\n4.5,0.5\n");
  const RuleFile b = read_rule_file(csv.str());
  EXPECT_EQ(b.weights, (std::vector<double>{0.5, 0.5}));
  EXPECT_FALSE(b.m.has_value());

  const TempFile broken("rule_broken.json", R"({"nodes": [1.5]})");
  EXPECT_EQ(code_of([&] { (void)read_rule_file(broken.str()); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { (void)read_rule_file("/nonexistent/rule.json"); }), ErrorCode::Parse);
}
