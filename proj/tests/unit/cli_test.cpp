#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "maxmaxflow_cli/cli.hpp"

namespace fs = std::filesystem;
using maxmaxflow::cli::dispatch;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "maxmaxflow_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Drops the manifest lines that echo argv.
std::string body(const std::string& text) {
  std::string out;
  for (const auto& l : lines(text))
    if (l.rfind("# argv:", 0) != 0) out += l + "\n";
  return out;
}

std::vector<std::string> csv_fields(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (char c : line) {
    if (c == '"')
      quoted = !quoted;
    else if (c == ',' && !quoted)
      out.emplace_back();
    else
      out.back() += c;
  }
  return out;
}

std::string theta_file() {
  const auto g = run({"generate", "theta", "--r", "3", "--w", "1/2"});
  EXPECT_EQ(g.code, 0) << g.err;
  return write_temp("theta.g", g.out);
}

}  // namespace

TEST(Cli, Base64AndDigest) {
  for (const std::string s : {"", "a", "ab", "abc", "v 2\ne 1 2 1/2\n"})
    EXPECT_EQ(maxmaxflow::cli::base64_decode(maxmaxflow::cli::base64_encode(s)), s);
  EXPECT_EQ(maxmaxflow::cli::base64_encode("abc"), "YWJj");
  EXPECT_THROW(maxmaxflow::cli::base64_decode("@@@"), std::invalid_argument);
  EXPECT_EQ(maxmaxflow::cli::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Cli, VerifyThetaExample) {
  const auto path = theta_file();
  const auto r = run({"verify", "--bound", "prop4.3", "--x", "1", "--y", "2", "-m", "8", path});
  EXPECT_EQ(r.code, maxmaxflow::cli::kExitOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_GE(ls.size(), 2u);
  EXPECT_EQ(ls[0], "prop4.3 CONSISTENT_UP_TO_M M=8");
  EXPECT_EQ(ls[1], "S_M = 19/27");
}

TEST(Cli, LambdaAndCount) {
  const auto star = write_temp("star.g", run({"generate", "star", "--r", "3"}).out);
  const auto l = run({"lambda", star});
  EXPECT_EQ(l.code, 0);
  EXPECT_NE(l.out.find("1"), std::string::npos);
  EXPECT_EQ(run({"lambda", "--blockwise", star}).out, l.out);

  const auto c = run({"count", "--class", "T", "--x", "1,2", "-m", "4", theta_file()});
  EXPECT_EQ(c.code, 0) << c.err;
  for (const char* v : {"0", "1/2"}) EXPECT_NE(c.out.find(v), std::string::npos);
}

TEST(Cli, ErrorsAndHelpExitCodes) {
  EXPECT_EQ(run({}).code, maxmaxflow::cli::kExitError);
  EXPECT_EQ(run({"frobnicate"}).code, maxmaxflow::cli::kExitError);
  EXPECT_EQ(run({"lambda", "/nonexistent/graph.g"}).code, maxmaxflow::cli::kExitError);
  EXPECT_EQ(run({"--help"}).code, maxmaxflow::cli::kExitOk);
  const auto bad = write_temp("bad.g", "v 2\ne 1 1 1\n");
  const auto r = run({"lambda", bad});
  EXPECT_EQ(r.code, maxmaxflow::cli::kExitError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"verify", "--bound", "nope", theta_file()}).code, maxmaxflow::cli::kExitError);
}

TEST(Cli, ManifestHeaderRecordsInputDigest) {
  const auto path = theta_file();
  const auto r = run({"suite", "--x", "1,2", "--y", "3", "-m", "3", path});
  EXPECT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_NE(r.out.find("sha256=" + maxmaxflow::cli::sha256_hex(text.str())), std::string::npos);
  EXPECT_NE(r.out.find("id,shape,discount,M,decisive_m,S_M,S_M_hi,bound,ratio,verdict"), std::string::npos);
  EXPECT_EQ(r.out.find("VIOLATION"), std::string::npos);
}

TEST(Cli, HuntIsDeterministicAndIndependentOfJobs) {
  const std::vector<std::string> base{"hunt", "--conjecture", "5.7", "--trials", "100", "--seed", "7"};
  const auto a = run(base);
  const auto b = run(base);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto jobs = base;
  jobs.insert(jobs.end(), {"--jobs", "3"});
  EXPECT_EQ(body(run(jobs).out), body(a.out));
}

TEST(Cli, HuntRowsReplayThroughVerify) {
  const auto r = run({"hunt", "--conjecture", "7.9", "--trials", "60", "--seed", "2", "--top", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::vector<std::string> header;
  int replayed = 0;
  for (const auto& l : lines(r.out)) {
    if (l.empty() || l[0] == '#') continue;
    const auto f = csv_fields(l);
    if (header.empty()) {
      header = f;
      continue;
    }
    auto col = [&](const std::string& name) {
      return f[static_cast<size_t>(std::find(header.begin(), header.end(), name) - header.begin())];
    };
    std::vector<std::string> args{"verify", "--bound", "conj7.9", "--graph-b64", col("graph_b64"), "-m", col("M")};
    if (!col("X").empty()) args.insert(args.end(), {"--x", col("X")});
    if (!col("Y").empty()) args.insert(args.end(), {"--y", col("Y")});
    const auto v = run(args);
    EXPECT_EQ(v.code, 0) << v.err;
    const std::string sm = col("S_M_hi").empty() ? "S_M = " + col("S_M")
                                                  : "S_M in [" + col("S_M") + ", " + col("S_M_hi") + "]";
    EXPECT_NE(v.out.find(sm), std::string::npos) << v.out;
    ++replayed;
  }
  EXPECT_GT(replayed, 0);
}

TEST(Cli, InvariantsChromaticAndExplorer) {
  const auto path = theta_file();
  const auto inv = run({"invariants", path});
  EXPECT_EQ(inv.code, 0) << inv.err;
  const auto csv = run({"invariants", "--csv", "-", path});
  EXPECT_EQ(csv.code, 0);
  EXPECT_NE(csv.out.find(','), std::string::npos);

  const auto chr = run({"chromatic", path});
  EXPECT_EQ(chr.code, 0) << chr.err;
  EXPECT_NE(chr.out.find("q^5 - 6q^4 + 14q^3 - 15q^2 + 6q"), std::string::npos);
  EXPECT_NE(chr.out.find("~max|root|"), std::string::npos);

  const std::vector<std::string> e{"explore8", "--trials", "20", "--seed", "3", "--max-n", "8"};
  const auto a = run(e);
  EXPECT_EQ(a.code, 0) << a.err;
  auto jobs = e;
  jobs.insert(jobs.end(), {"--jobs", "2"});
  EXPECT_EQ(body(run(jobs).out), body(a.out));
  EXPECT_NE(a.out.find("# bucket Lambda="), std::string::npos);
}

TEST(Cli, GhtreeAndCutpair) {
  const auto path = theta_file();
  const auto t = run({"ghtree", path});
  EXPECT_EQ(t.code, 0) << t.err;
  EXPECT_NE(t.out.find("v 5"), std::string::npos);
  const auto c = run({"cutpair", "--set", "1,2,4", path});
  EXPECT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(run({"cutpair", "--set", "1", path}).code, maxmaxflow::cli::kExitError);
}
