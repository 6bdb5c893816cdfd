#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "vdyn/render.hpp"
#include "vdyn/serialize.hpp"
#include "vdyn/verify.hpp"

using namespace vdyn;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

Json without_duration(const VerificationReport& r) {
  Json j = to_json(r);
  j.erase("duration_ms");
  return j;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

}  // namespace

TEST(Orbits, Examples) {
  auto r = orbit_report("pro-pstrict", 1, 3);
  EXPECT_EQ(r.orbit_sizes, (std::vector<std::uint64_t>{3, 2}));
  EXPECT_EQ(r.order, 6u);
  EXPECT_TRUE(r.checks.at("pro_q_is_bc_swap"));
  r = orbit_report("pro-linext", 1, 3);
  EXPECT_EQ(r.orbit_sizes, (std::vector<std::uint64_t>{2}));
  EXPECT_EQ(r.order, 2u);
  r = orbit_report("row", 1, 3);
  EXPECT_EQ(r.orbit_sizes, (std::vector<std::uint64_t>{3, 2}));
  EXPECT_EQ(r.order, 6u);
  EXPECT_TRUE(r.checks.at("row_q_is_flip"));
  r = orbit_report("togpro", 2, 5);
  EXPECT_TRUE(r.checks.at("togpro_q_is_flip"));
  EXPECT_EQ(code_of([] { orbit_report("spin", 1, 3); }), ErrorCode::kInvalidArgument);
}

TEST(Orbits, Invariants) {
  for (const auto& action : action_names())
    for (int ell = 1; ell <= 2; ++ell)
      for (int q = 3; q <= 5; ++q) {
        const auto r = orbit_report(action, ell, q);
        std::uint64_t sum = 0;
        for (auto s : r.orbit_sizes) sum += s;
        EXPECT_EQ(sum, r.count);
        EXPECT_EQ(r.order, lcm_of(r.orbit_sizes));
        EXPECT_TRUE(std::is_sorted(r.orbit_sizes.rbegin(), r.orbit_sizes.rend()));
        for (const auto& [name, ok] : r.checks) EXPECT_TRUE(ok) << action << " " << name;
      }
}

TEST(Orbits, DetectsNonBijection) {
  const std::vector<int> xs{0, 1, 2};
  EXPECT_EQ(code_of([&] { orbit_decomposition("zero", Json::object(), xs, [](int) { return 0; }); }),
            ErrorCode::kNotBijective);
  EXPECT_EQ(code_of([&] { orbit_decomposition("out", Json::object(), xs, [](int x) { return x + 5; }); }),
            ErrorCode::kNotBijective);
  EXPECT_THROW(decompose_permutation({0, 0}), Error);
  EXPECT_THROW(decompose_permutation({2, 0}), Error);
  const auto c = decompose_permutation({1, 2, 0, 3});
  ASSERT_EQ(c.cycles.size(), 2u);
  EXPECT_EQ(c.cycles[0], (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(lcm_of({4, 6}), 12u);
  EXPECT_EQ(lcm_of({}), 1u);
}

TEST(Suites, FiguresPass) {
  const auto r = run_suite("figures");
  EXPECT_TRUE(r.passed());
  EXPECT_GE(r.claims.size(), 10u);
  for (const auto& c : r.claims) EXPECT_TRUE(c.pass) << c.id << " " << c.counterexample.dump();
}

TEST(Suites, MainAndStandardizationPass) {
  SuiteOptions o;
  o.ell_max = 2;
  o.q_max = 6;
  for (const char* s : {"main", "standardization", "layers", "doublearcs", "equivariance"}) {
    const auto r = run_suite(s, o);
    EXPECT_TRUE(r.passed()) << s;
    for (const auto& c : r.claims) {
      EXPECT_EQ(c.id.rfind(std::string(s) + "/", 0), 0u);
      EXPECT_TRUE(c.counterexample.is_null());
    }
  }
}

TEST(Suites, Deterministic) {
  SuiteOptions one;
  one.threads = 1;
  SuiteOptions many;
  many.threads = 4;
  const auto a = run_suite("all", one);
  const auto b = run_suite("all", many);
  EXPECT_EQ(without_duration(a).dump(), without_duration(b).dump());
  EXPECT_EQ(to_csv(VerificationReport{a.suite, a.claims, 0}), to_csv(VerificationReport{b.suite, b.claims, 0}));
}

TEST(Suites, Errors) {
  EXPECT_EQ(code_of([] { run_suite("nope"); }), ErrorCode::kInvalidArgument);
  SuiteOptions tiny;
  tiny.max_elements = 10;
  EXPECT_EQ(code_of([&] { run_suite("main", tiny); }), ErrorCode::kCeilingExceeded);
}

TEST(Serialize, OrbitReportJson) {
  const auto r = orbit_report("pro-pstrict", 1, 3);
  const auto text = to_json(r).dump();
  EXPECT_NE(text.find("\"orbit_sizes\":[3,2],\"order\":6"), std::string::npos) << text;
  EXPECT_EQ(orbit_report_from_json(Json::parse(text)), r);
}

TEST(Serialize, EmptySuite) {
  const VerificationReport empty{"none", {}, 0};
  const auto j = to_json(empty);
  EXPECT_TRUE(j.at("claims").is_array());
  EXPECT_TRUE(j.at("claims").empty());
  EXPECT_TRUE(empty.passed());
}

TEST(Serialize, VerificationRoundTrip) {
  auto r = run_suite("figures");
  r.claims.push_back({"x/failing", {{"ell", 1}}, false, {{"word", "A|B|C"}}});
  const auto back = verification_report_from_json(Json::parse(to_json(r).dump()));
  EXPECT_EQ(back.claims, r.claims);
  EXPECT_EQ(back.duration_ms, r.duration_ms);
  EXPECT_FALSE(back.passed());
}

TEST(Serialize, CsvSizes) {
  const auto r = orbit_report("pro-pstrict", 2, 4);
  EXPECT_EQ(orbit_sizes_from_csv(to_csv(r)), r.orbit_sizes);
  EXPECT_THROW(orbit_sizes_from_csv("a,b\n"), Error);
}

TEST(Serialize, ExportFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "vdyn_export_test";
  std::filesystem::create_directories(dir);
  const auto r = orbit_report("row", 1, 4);
  export_report(r, dir / "r.json", ReportFormat::kJson);
  export_report(r, dir / "r.csv", ReportFormat::kCsv);
  EXPECT_EQ(orbit_report_from_json(Json::parse(slurp(dir / "r.json"))), r);
  EXPECT_EQ(orbit_sizes_from_csv(slurp(dir / "r.csv")), r.orbit_sizes);
  EXPECT_EQ(code_of([&] { export_report(r, dir / "missing" / "r.json", ReportFormat::kJson); }), ErrorCode::kIo);
  EXPECT_EQ(parse_report_format("csv"), ReportFormat::kCsv);
  EXPECT_THROW(parse_report_format("xml"), Error);
  std::filesystem::remove_all(dir);
}

TEST(Serialize, CoreTypesRoundTrip) {
  for (const auto& f : enumerate_labelings(2, 4)) EXPECT_EQ(labeling_from_json(to_json(f)), f);
  for (const auto& w : enumerate_words(2, 4)) EXPECT_EQ(word_from_json(to_json(w)), w);
  for (const auto& f : enumerate_ppartitions(v_times_chain(2), 2)) EXPECT_EQ(ppartition_from_json(to_json(f)), f);
  EXPECT_EQ(word_from_json(Json("A|B|C")), MultiKrewerasWord::parse("A|B|C"));
  EXPECT_THROW(labeling_from_json(Json::object()), Error);
  EXPECT_THROW(labeling_from_json(Json::parse(R"({"ell":1,"q":3,"fibers":{"A":[1],"B":[1],"C":[2]}})")), Error);
}

TEST(Render, AsciiSingleLayer) {
  const auto text = render_diagram(MultiKrewerasWord::parse("[A][B][C]"), RenderFormat::kAscii);
  EXPECT_NE(text.find("A | B | C"), std::string::npos) << text;
  EXPECT_NE(text.find("B +---+"), std::string::npos) << text;
  EXPECT_NE(text.find("C +.......+"), std::string::npos) << text;
  EXPECT_NE(text.find("B 1->2"), std::string::npos);
  EXPECT_NE(text.find("C 1->3"), std::string::npos);
}

TEST(Render, SvgFigureWord) {
  const auto w = MultiKrewerasWord::parse("A|CA|BBAA|BCCA|C|BA|B|CC|B");
  const auto svg = render_diagram(w, RenderFormat::kSvg);
  EXPECT_EQ(count_of(svg, "class=\"arc-b\""), 6u);
  EXPECT_EQ(count_of(svg, "class=\"arc-c\""), 6u);
  EXPECT_EQ(count_of(svg, "class=\"double-arc\""), 1u);
  EXPECT_EQ(count_of(svg, "class=\"block-index\""), 9u);
  EXPECT_EQ(svg, render_diagram(w, RenderFormat::kSvg));
}

TEST(Render, KrewerasWord) {
  const auto w = KrewerasWord::parse("ACABBAABCCACBABCCB");
  const auto svg = render_diagram(w, RenderFormat::kSvg);
  EXPECT_EQ(count_of(svg, "<path "), 12u);
  EXPECT_EQ(count_of(svg, "double-arc\""), 0u);
  const auto ascii = render_diagram(w, RenderFormat::kAscii);
  EXPECT_EQ(ascii, render_diagram(w, RenderFormat::kAscii));
  EXPECT_NE(ascii.find("B 6->18"), std::string::npos);
  EXPECT_THROW(parse_render_format("png"), Error);
}
