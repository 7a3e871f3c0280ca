#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "sx/sx.hpp"

namespace fs = std::filesystem;

namespace {

const char* kTriangleChainCsv =
    ",a,b,c,d,e,f\n"
    "a,0,1,1,1,0,0\n"
    "b,1,0,1,0,0,0\n"
    "c,1,1,0,1,0,0\n"
    "d,1,0,1,0,1,1\n"
    "e,0,0,0,1,0,1\n"
    "f,0,0,0,1,1,0\n";

sx::RawMatrix parse(const std::string& text) {
    std::istringstream in(text);
    return sx::parse_matrix_csv(in);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class TempDir : public ::testing::Test {
protected:
    void SetUp() override {
        dir = fs::temp_directory_path() /
              ("sx_io_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }
    fs::path dir;
};

std::string expect_input_error(const std::string& text) {
    try {
        parse(text);
    } catch (const sx::InputError& e) {
        return e.what();
    }
    ADD_FAILURE() << "no error for:\n" << text;
    return {};
}

} // namespace

TEST(ParseMatrixCsv, WellFormed) {
    const auto m = parse("x,y,z\nx,0,1,0\ny,1,0,1\nz,0,1,0\n");
    EXPECT_EQ(m.labels, (std::vector<std::string>{"x", "y", "z"}));
    EXPECT_EQ(m.entries[1], (std::vector<double>{1, 0, 1}));
    EXPECT_TRUE(m.warnings.empty());
}

TEST(ParseMatrixCsv, AcceptsCornerCellAndCrlf) {
    const auto m = parse(",x,y\r\nx,0,1\r\ny,1,0\r\n");
    EXPECT_EQ(m.labels, (std::vector<std::string>{"x", "y"}));
    EXPECT_EQ(m.entries[0][1], 1.0);
}

TEST(ParseMatrixCsv, ShapeMismatchNamesTheRow) {
    const auto msg = expect_input_error("x,y,z\nx,0,1,0\ny,1,0,1,1\nz,0,1,0\n");
    EXPECT_NE(msg.find("data row 2"), std::string::npos) << msg;
    EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
}

TEST(ParseMatrixCsv, NonzeroBecomesOneWithWarning) {
    const auto m = parse("x,y\nx,0,2\ny,0,0\n");
    EXPECT_EQ(m.entries[0][1], 1.0);
    ASSERT_EQ(m.warnings.size(), 1u);
    EXPECT_NE(m.warnings[0].find("line 2, column 3"), std::string::npos);
    EXPECT_TRUE(sx::normalize_graph(m).has_edge(0, 1));
}

TEST(ParseMatrixCsv, Errors) {
    EXPECT_NE(expect_input_error("x,y\nx,0,q\ny,0,0\n").find("column 3"), std::string::npos);
    EXPECT_NE(expect_input_error("x,x\nx,0,1\nx,1,0\n").find("duplicate"), std::string::npos);
    EXPECT_NE(expect_input_error("x,y\nx,0,1\n").find("not square"), std::string::npos);
    EXPECT_NE(expect_input_error("").find("empty"), std::string::npos);
    expect_input_error("x,y\nx,0,1\ny,1,0\nz,0,0\n");
    EXPECT_THROW(sx::parse_matrix_csv(fs::path("/nonexistent/matrix.csv")), sx::IoError);
}

TEST(RunAnalysis, TriangleChainVerdicts) {
    const auto run = sx::run_analysis(parse(kTriangleChainCsv), {}, "triangle_chain");
    ASSERT_EQ(run.levels.size(), 3u);
    EXPECT_TRUE(run.levels[0].connected);
    EXPECT_FALSE(run.levels[1].connected);
    EXPECT_FALSE(run.levels[2].connected);
    EXPECT_EQ(run.levels[1].component_sizes, (std::vector<std::size_t>{6, 1, 1}));
    EXPECT_EQ(run.summary.clique_number, 3u);
    EXPECT_EQ(run.summary.cliques_of_size(2), 8u);
    EXPECT_EQ(run.summary.cliques_of_size(3), 3u);
    for (const auto& lr : run.levels) EXPECT_EQ(lr.measures.size(), 5u);
    EXPECT_EQ(run.cross_level.size(), 5u);
}

TEST(RunAnalysis, TriangleLevelOneIsDisconnectedWithZeroDegrees) {
    sx::AnalysisOptions opts;
    opts.levels = {0, 1};
    const auto run = sx::run_analysis(parse("a,b,c\na,0,1,1\nb,1,0,1\nc,1,1,0\n"), opts);
    ASSERT_EQ(run.levels.size(), 2u);
    EXPECT_TRUE(run.levels[0].connected);
    EXPECT_FALSE(run.levels[1].connected);
    for (const auto& e : run.levels[1].measures.at(sx::Measure::degree).entries) EXPECT_EQ(e.score, 0.0);
}

TEST(RunAnalysis, EmptyGraphWarns) {
    const auto run = sx::run_analysis(parse("a,b\na,0,0\nb,0,0\n"), {});
    EXPECT_TRUE(run.levels.empty());
    ASSERT_FALSE(run.warnings.empty());
    EXPECT_NE(run.warnings.back().find("empty"), std::string::npos);
}

TEST(RunAnalysis, MissingLevelIsMarkedNotFailed) {
    sx::AnalysisOptions opts;
    opts.levels = {0, 1, 2};
    const auto run = sx::run_analysis(parse("a,b,c\na,0,1,0\nb,1,0,1\nc,0,1,0\n"), opts);
    ASSERT_EQ(run.levels.size(), 3u);
    EXPECT_EQ(run.levels[2].simplex_count, 0u);
    EXPECT_TRUE(run.levels[2].measures.empty());
    const auto j = sx::to_json(run);
    EXPECT_EQ(j["levels"][2], (nlohmann::json{{"k", 2}, {"simplex_count", 0}}));
}

TEST(RunAnalysis, AllLevelsAndMaxDim) {
    const std::string k5 = "a,b,c,d,e\na,0,1,1,1,1\nb,1,0,1,1,1\nc,1,1,0,1,1\nd,1,1,1,0,1\ne,1,1,1,1,0\n";
    sx::AnalysisOptions all;
    all.all_levels = true;
    all.measures = {sx::Measure::degree};
    EXPECT_EQ(sx::run_analysis(parse(k5), all).levels.size(), 5u);
    sx::AnalysisOptions capped = all;
    capped.max_dim = 2;
    const auto run = sx::run_analysis(parse(k5), capped);
    EXPECT_EQ(run.levels.size(), 3u);
    EXPECT_EQ(run.summary.clique_number, 5u);
    EXPECT_EQ(run.summary.dim, 2);
}

TEST(Report, JsonRoundTripIsExact) {
    const auto run = sx::run_analysis(parse(kTriangleChainCsv), {}, "triangle_chain", "sha256:test");
    const auto text = sx::to_json(run).dump();
    const auto back = sx::analysis_from_json(nlohmann::json::parse(text));
    EXPECT_EQ(back, run);
    EXPECT_EQ(sx::to_json(back).dump(), text);
}

TEST(Report, MalformedJsonIsAnInputError) {
    EXPECT_THROW(sx::analysis_from_json(nlohmann::json{{"network", "x"}}), sx::InputError);
}

TEST_F(TempDir, WritesAreByteStable) {
    const auto raw = parse(kTriangleChainCsv);
    const auto a = sx::run_analysis(raw, {}, "triangle_chain");
    const auto b = sx::run_analysis(raw, {}, "triangle_chain");
    sx::write_report(a, sx::ReportFormat::json, dir / "a.json");
    sx::write_report(b, sx::ReportFormat::json, dir / "b.json");
    EXPECT_EQ(slurp(dir / "a.json"), slurp(dir / "b.json"));
    EXPECT_EQ(sx::read_report(dir / "a.json"), a);

    sx::write_report(a, sx::ReportFormat::csv, dir / "csv_a");
    sx::write_report(b, sx::ReportFormat::csv, dir / "csv_b");
    const auto files = sx::write_report_csv(a, dir / "csv_a");
    EXPECT_EQ(files.size(), 15u);
    for (const auto& f : files) EXPECT_EQ(slurp(f), slurp(dir / "csv_b" / f.filename()));
    const auto k1 = slurp(dir / "csv_a" / "k1_degree.csv");
    EXPECT_EQ(k1.substr(0, k1.find('\n')), "simplex;score;rank;flags");
    EXPECT_NE(k1.find("{a,c};0;"), std::string::npos);
    EXPECT_NE(k1.find("ISOLATED"), std::string::npos);
}

TEST_F(TempDir, UnwritablePathIsAnIoError) {
    const auto run = sx::run_analysis(parse(kTriangleChainCsv), {});
    EXPECT_THROW(sx::write_report(run, sx::ReportFormat::json, dir / "missing" / "x.json"), sx::IoError);
}

TEST_F(TempDir, PlotFileContract) {
    sx::AnalysisOptions opts;
    opts.measures = {sx::Measure::degree};
    const auto run = sx::run_analysis(parse(kTriangleChainCsv), opts, "triangle_chain");
    const auto files = sx::emit_plots(run, dir);
    std::size_t svgs = 0, compare = 0;
    for (const auto& f : files) {
        EXPECT_TRUE(fs::exists(f));
        if (f.extension() == ".svg") ++svgs;
        if (f.filename().string().starts_with("compare_")) ++compare;
    }
    EXPECT_EQ(svgs, 4u);
    EXPECT_EQ(compare, 1u);
    EXPECT_TRUE(fs::exists(dir / "k1_degree.csv"));
}

TEST_F(TempDir, EmptyRunPlotsNothing) {
    const auto run = sx::run_analysis(parse("a,b\na,0,0\nb,0,0\n"), {});
    EXPECT_TRUE(sx::emit_plots(run, dir / "plots").empty());
    EXPECT_FALSE(fs::exists(dir / "plots"));
}

TEST_F(TempDir, ZeroScoresDrawZeroHeightBars) {
    sx::AnalysisOptions opts;
    opts.levels = {1};
    opts.measures = {sx::Measure::degree};
    const auto run = sx::run_analysis(parse("a,b,c\na,0,1,1\nb,1,0,1\nc,1,1,0\n"), opts);
    sx::emit_plots(run, dir);
    const auto svg = slurp(dir / "k1_degree.svg");
    std::size_t bars = 0;
    for (auto pos = svg.find("<rect x="); pos != std::string::npos; pos = svg.find("<rect x=", pos + 1)) {
        ++bars;
        const auto h = svg.find("height=\"", pos);
        EXPECT_EQ(svg.substr(h, 14), "height=\"0.00\" ");
    }
    EXPECT_EQ(bars, 3u);
}

TEST_F(TempDir, LevelMatrixDump) {
    const auto c = sx::clique_complex(fixtures::triangle_chain());
    const auto a = sx::level_adjacency(c, 2);
    sx::write_level_matrix(dir / "m.csv", dir / "basis.txt", a.combined, a.simplices, c.labels());
    EXPECT_EQ(slurp(dir / "m.csv"), "0,1,0\n1,0,0\n0,0,0\n");
    EXPECT_EQ(slurp(dir / "basis.txt"), "a b c\na c d\nd e f\n");
}

TEST(ExpectedCounts, FlagsDiscrepancies) {
    const auto g = fixtures::triangle_chain();
    const auto s = sx::summarize(g, sx::clique_complex(g));
    EXPECT_TRUE(sx::check_expected_counts(s, {{"vertices", 6}, {"edges", 8}, {"cliques", {{"3", 3}}}, {"clique_number", 3}}).empty());
    const auto diffs = sx::check_expected_counts(s, {{"edges", 9}, {"cliques", {{"4", 1}}}});
    EXPECT_EQ(diffs.size(), 2u);
}
