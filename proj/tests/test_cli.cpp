#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_support.hpp"
#include "wigner/cli.hpp"
#include "wigner/errors.hpp"

namespace wigner::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_args(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string shell_output(const std::string& command) {
  std::string text;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return text;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) text.append(buf.data(), n);
  pclose(pipe);
  return text;
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

TEST(ParseHalfInt, AcceptedForms) {
  EXPECT_EQ(parse_halfint("3.5").twice(), 7);
  EXPECT_EQ(parse_halfint("7/2").twice(), 7);
  EXPECT_EQ(parse_halfint("20").twice(), 40);
  EXPECT_EQ(parse_halfint("0.5").twice(), 1);
  EXPECT_EQ(parse_halfint("4/2").twice(), 4);
  EXPECT_EQ(parse_halfint("2.0").twice(), 4);
  EXPECT_EQ(parse_halfint("-1/2").twice(), -1);
  EXPECT_EQ(parse_halfint("-3").twice(), -6);
}

TEST(ParseHalfInt, RejectsNonHalves) {
  for (const char* bad : {"3.2", "1/3", "", "x", "1/0", "1.", ".5", "2/", "1e3", "99999999999"}) {
    try {
      parse_halfint(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const ParseError& e) {
      EXPECT_NE(std::string(e.what()).find(std::string("'") + bad + "'"), std::string::npos)
          << e.what();
    }
  }
}

TEST(Run, TableRowText) {
  const auto r = run_args({"12j1", "0", "1", "1", "1", "1", "1", "0", "1", "1", "1", "1", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "12j1 0 1 1 1 1 1 0 1 1 1 1 1 => 1/54 0.0185185185185\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Run, ZeroValueIsSuccess) {
  const auto r = run_args({"6j", "1", "1", "3", "1", "1", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "6j 1 1 3 1 1 1 => 0 0\n");
}

TEST(Run, HalfIntegerArgumentsEchoAsFractions) {
  const auto r =
      run_args({"12j2", "5.5", "4.5", "6.5", "3.5", "6", "6", "5", "4", "1.5", "4.5", "6.5", "0.5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "12j2 11/2 9/2 13/2 7/2 6 6 5 4 3/2 9/2 13/2 1/2 => "
            "1/40898*(19/14)^(1/2) 2.84846384914e-05\n");
}

TEST(Run, Json) {
  const auto r = run_args({"--json", "12j1", "1", "1", "2", "2", "2", "2", "2", "1", "1", "2", "1", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            R"j({"kind":"12j1","args":["1","1","2","2","2","2","2","1","1","2","1","2"],)j"
            R"j("exact":"-7/3000*(7/3)^(1/2)","coeff":"-7/3000","radicand":"7/3",)j"
            R"j("decimal":"-0.00356422554052"})j"
            "\n");
  const auto z = run_args({"6j", "1", "1", "3", "1", "1", "1", "--json"});
  EXPECT_NE(z.out.find(R"j("exact":"0","coeff":"0","radicand":"1","decimal":"0")j"),
            std::string::npos);
}

TEST(Run, Digits) {
  EXPECT_EQ(run_args({"6j", "1", "1", "1", "1", "1", "1", "--digits", "3"}).out,
            "6j 1 1 1 1 1 1 => 1/6 0.167\n");
  EXPECT_EQ(run_args({"6j", "1", "1", "1", "1", "1", "1", "--digits=20"}).out,
            "6j 1 1 1 1 1 1 => 1/6 0.16666666666666666667\n");
  EXPECT_EQ(run_args({"6j", "1", "1", "1", "1", "1", "1", "--digits", "0"}).code, 2);
  EXPECT_EQ(run_args({"6j", "1", "1", "1", "1", "1", "1", "--digits", "1001"}).code, 2);
  EXPECT_EQ(run_args({"6j", "1", "1", "1", "1", "1", "1", "--digits"}).code, 2);
}

TEST(Run, ThreeJmTakesSignedProjections) {
  const auto r = run_args({"3jm", "1", "1", "0", "1", "-1", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3jm 1 1 0 1 -1 0 => 1*(1/3)^(1/2) 0.57735026919\n");
}

TEST(Run, ErrorsExitTwoWithoutOutput) {
  const std::vector<std::vector<std::string>> cases{
      {"21j", "1"},
      {"6j", "1", "1", "1", "1", "1"},
      {"6j", "1", "1", "1", "1", "1", "3.2"},
      {"6j", "1", "1", "1", "1", "1", "-1"},
      {"3jm", "1", "1", "0", "1/2", "-1/2", "0"},
      {"6j", "1", "1", "1", "1", "1", "1", "--frobnicate"},
      {},
  };
  for (const auto& args : cases) {
    const auto r = run_args(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "" : args[0]);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
  }
  EXPECT_NE(run_args({"6j", "1", "1", "1", "1", "1", "3.2"}).err.find("'3.2'"), std::string::npos);
  EXPECT_NE(run_args({"21j", "1"}).err.find("21j"), std::string::npos);
}

TEST(Run, Help) {
  const auto r = run_args({"--help"});
  EXPECT_EQ(r.code, 0);
  for (const auto kind : kAllKinds) {
    EXPECT_NE(r.out.find(std::string(kind_name(kind))), std::string::npos) << kind_name(kind);
  }
}

TEST(Batch, CommentsBlankLinesAndOrder) {
  const auto path = temp_file("wigner_batch_ok.txt",
                              "# header\n"
                              "\n"
                              "6j 1 1 1 1 1 1   # trailing\n"
                              "6j 0 1 1 1 1 1\n"
                              "   \n"
                              "9j 1 1 0 1 1 0 0 0 0\n");
  const auto r = run_args({"batch", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "6j 1 1 1 1 1 1 => 1/6 0.166666666667\n"
            "6j 0 1 1 1 1 1 => -1/3 -0.333333333333\n"
            "9j 1 1 0 1 1 0 0 0 0 => 1/3 0.333333333333\n");
}

TEST(Batch, ErrorNamesLineAndPrintsNothing) {
  const auto path = temp_file("wigner_batch_bad.txt",
                              "6j 1 1 1 1 1 1\n"
                              "# fine so far\n"
                              "6j 1 1 1 1 1 1/3\n");
  const auto r = run_args({"batch", path.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("'1/3'"), std::string::npos) << r.err;

  const auto arity = temp_file("wigner_batch_arity.txt", "6j 1 1 1 1 1 1\n9j 1 1 1\n");
  const auto a = run_args({"batch", arity.string()});
  EXPECT_EQ(a.code, 2);
  EXPECT_TRUE(a.out.empty());
  EXPECT_NE(a.err.find("line 2"), std::string::npos) << a.err;

  EXPECT_EQ(run_args({"batch", "/nonexistent/wigner.txt"}).code, 2);
  EXPECT_EQ(run_args({"batch"}).code, 2);
}

TEST(Batch, RecordsAreMutuallyConsistent) {
  for (const auto& row : testing::load_golden(testing::golden_path())) {
    const ResultRecord rec = make_record(testing::spec_of(row));
    const Surd parsed = parse_surd(rec.exact);
    EXPECT_EQ(parsed.coeff().to_string(), rec.coeff) << row.label;
    EXPECT_EQ(parsed.radicand().to_string(), rec.radicand) << row.label;
    EXPECT_EQ(to_decimal(parsed), rec.decimal) << row.label;
  }
}

TEST(Tool, GoldenCorpusRoundTrip) {
  const std::string out =
      shell_output(std::string("'") + WIGNER_TOOL + "' batch '" + testing::golden_path() + "'");
  const auto rows = testing::load_golden(testing::golden_path());
  std::istringstream lines(out);
  std::size_t i = 0;
  for (std::string line; std::getline(lines, line); ++i) {
    ASSERT_LT(i, rows.size());
    const auto arrow = line.find(" => ");
    ASSERT_NE(arrow, std::string::npos) << line;
    EXPECT_EQ(line.substr(arrow + 4), rows[i].exact + " " + rows[i].decimal) << rows[i].label;
  }
  EXPECT_EQ(i, rows.size());
}

TEST(Tool, BatchIsDeterministic) {
  const std::string command = std::string("'") + WIGNER_TOOL + "' batch '" + testing::golden_path() + "' --json";
  const std::string first = shell_output(command);
  EXPECT_FALSE(first.empty());
  EXPECT_EQ(first, shell_output(command));
}

TEST(Tool, ExitCodes) {
  const std::string tool = std::string("'") + WIGNER_TOOL + "'";
  EXPECT_EQ(WEXITSTATUS(std::system((tool + " 6j 1 1 3 1 1 1 >/dev/null").c_str())), 0);
  EXPECT_EQ(WEXITSTATUS(std::system((tool + " 6j 1 1 3 1 1 >/dev/null 2>&1").c_str())), 2);
  EXPECT_EQ(WEXITSTATUS(std::system((tool + " 6j 1 1 3 1 1 x >/dev/null 2>&1").c_str())), 2);
}

}  // namespace
}  // namespace wigner::cli
