#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <hermon/cli.hpp>

using namespace hermon;

namespace {

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("basis command emits one element per line") {
  auto res = run_command(
      {"basis", "--n", "2", "--a", "1", "--b", "0", "--r", "1", "--closed-form", "--format",
       "json"});
  CHECK(res.status == 0);
  CHECK(count_lines(res.output) == 3);
  CHECK(res.output.find(R"("n":2)") != std::string::npos);
  // recursive construction agrees on the count
  auto rec = run_command({"basis", "--n", "2", "--a", "1", "--b", "0", "--r", "1"});
  CHECK(rec.status == 0);
  CHECK(count_lines(rec.output) == 3);
  // latex output
  auto tex = run_command(
      {"basis", "--n", "2", "--a", "0", "--b", "0", "--r", "1", "--format", "latex"});
  CHECK(tex.status == 0);
  CHECK(tex.output.find("\\fd_{") != std::string::npos);
  // an invalid label is an empty basis, not an error
  auto empty = run_command({"basis", "--n", "2", "--a", "1", "--b", "0", "--r", "0"});
  CHECK(empty.status == 0);
  CHECK(empty.output.empty());
}

TEST_CASE("usage errors exit with status two") {
  CHECK(run_command({}).status == 2);
  CHECK(run_command({"bogus"}).status == 2);
  CHECK(run_command({"basis", "--n", "2"}).status == 2);                  // missing required
  CHECK(run_command({"basis", "--n", "2", "--a", "0", "--b", "0", "--r", "1",
                     "--format", "xml"})
            .status == 2);                                                // bad enum
  auto unknown = run_command(
      {"basis", "--n", "2", "--a", "0", "--b", "0", "--r", "1", "--whatever"});
  CHECK(unknown.status == 2);
  CHECK_FALSE(unknown.output.empty());
  // closed form is a two-variable construction only
  CHECK(run_command({"basis", "--n", "3", "--a", "0", "--b", "0", "--r", "1",
                     "--closed-form"})
            .status == 2);
  CHECK(run_command({"verify", "--suite", "no-such-suite"}).status == 2);
  // help is not an error
  CHECK(run_command({"--help"}).status == 0);
}

TEST_CASE("branch command lists children with factors") {
  auto res = run_command({"branch", "--n", "2", "--a", "0", "--b", "0", "--r", "1"});
  CHECK(res.status == 0);
  CHECK(count_lines(res.output) == 2);
  CHECK(res.output.find("case i") != std::string::npos);
  CHECK(res.output.find("\\mathrm{id}") != std::string::npos);
  CHECK(run_command({"branch", "--n", "2", "--a", "1", "--b", "1", "--r", "0"}).status == 2);
}

TEST_CASE("verify command reports and sets the exit status") {
  auto res = run_command({"verify", "--suite", "car", "--n", "2"});
  CHECK(res.status == 0);
  CHECK(res.output.find("PASS car") != std::string::npos);
  CHECK(res.output.find("failures 0") != std::string::npos);
  auto app = run_command({"verify", "--suite", "appell", "--a-max", "2", "--b-max", "2"});
  CHECK(app.status == 0);
  CHECK(app.output.find("PASS appell") != std::string::npos);
}

TEST_CASE("dims command cross-checks the kernel oracle") {
  auto res = run_command({"dims", "--n", "2", "--k", "2"});
  CHECK(res.status == 0);
  CHECK(res.output.find("total 24") != std::string::npos);
  CHECK(res.output.find("kernel dimension 24") != std::string::npos);
}

TEST_CASE("output redirection") {
  std::string path = "cli_test_out.json";
  auto res = run_command({"--out", path, "basis", "--n", "2", "--a", "0", "--b", "1",
                          "--r", "0", "--format", "json"});
  CHECK(res.status == 0);
  CHECK(res.output.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(count_lines(buf.str()) == 2);
  f.close();
  std::remove(path.c_str());
}
