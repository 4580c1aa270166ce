#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "signed_spectra/cli.hpp"

using namespace signed_spectra;
using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
  json payload() const { return json::parse(out); }
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen emits SG1 and validates instances") {
  auto r = run_cli({"gen", "A2(2,2)"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 6) == "SG1 8 ");

  CHECK(run_cli({"gen", "TJ(2,2)"}).out == "SG1 4 +++++-\n");
  CHECK(run_cli({"gen", "A5(3,8,1)"}).code == 2);
  CHECK(run_cli({"gen", "A5(3,8,1)", "--allow-a5-k1"}).code == 0);
  CHECK(run_cli({"gen", "Z9(1)"}).code == 2);
  CHECK(run_cli({"gen"}).code == 2);
  CHECK(run_cli({"gen", "A2(2,2)", "--bogus-flag"}).code == 2);
}

TEST_CASE("spectrum accepts inline, stdin and files") {
  auto r = run_cli({"spectrum", "SG1 2 +"});
  CHECK(r.code == 0);
  auto j = r.payload();
  CHECK(j["n"] == 2);
  CHECK(j["mult_plus1"] == 1);
  CHECK(j["mult_minus1"] == 1);
  CHECK(j["member"] == true);

  auto piped = run_cli({"spectrum", "-"}, "SG1 2 +\n");
  CHECK(piped.payload() == j);

  CHECK(run_cli({"spectrum", "SG1 3 ++"}).code == 2);
  CHECK(run_cli({"spectrum", "/no/such/file"}).code == 2);
}

TEST_CASE("gen piped into spectrum matches the claimed spectrum") {
  for (const std::string inst : {"A2(2,2)", "A3(2,3)", "A16()", "TJ(3,4)", "A9(2)"}) {
    auto g = run_cli({"gen", inst});
    REQUIRE(g.code == 0);
    std::string line = g.out.substr(0, g.out.find('\n'));
    auto s = run_cli({"spectrum", line});
    REQUIRE(s.code == 0);
    auto claimed = claimed_spectrum(parse_instance(inst));
    auto j = s.payload();
    CHECK(j["mult_plus1"] == claimed.mult_plus1);
    CHECK(j["mult_minus1"] == claimed.mult_minus1);
    CHECK(j["residual"].size() == 3);
    CHECK(j["residual"][0] == claimed.residual.coeff(0).str());
  }
}

TEST_CASE("check reports a coherent verdict") {
  auto member = run_cli({"check", "SG1 4 ++0+-+"});  // A3(1,1)
  CHECK(member.code == 0);
  auto j = member.payload();
  CHECK(j["member"] == true);
  CHECK(j["consistent"] == true);
  CHECK(j["deg1_violations"].empty());
  CHECK(j["forbidden"].is_null());
  CHECK(j["square"]["rank"] == 2);

  auto p3 = run_cli({"check", "SG1 3 +0+"});
  CHECK(p3.code == 0);  // not a member; violations are expected, not errors
  auto k = p3.payload();
  CHECK(k["member"] == false);
  CHECK(k["deg1_violations"].size() == 4);  // two endpoints, equal-column pair both ways

  auto c4neg = run_cli({"check", "SG1 4 +0-+0+"});
  CHECK(c4neg.payload()["forbidden"].is_object());
}

TEST_CASE("iso exit codes carry the verdict") {
  auto yes = run_cli({"iso", "SG1 3 -++", "SG1 3 ---"});
  CHECK(yes.code == 0);
  CHECK(yes.payload()["isomorphic"] == true);
  auto no = run_cli({"iso", "SG1 3 -++", "SG1 3 +++"});
  CHECK(no.code == 1);
  CHECK(no.payload()["isomorphic"] == false);
}

TEST_CASE("families verify") {
  auto r = run_cli({"families", "verify", "--nmax", "10"});
  CHECK(r.code == 0);
  auto j = r.payload();
  CHECK(j["ok"] == true);
  CHECK(j["failures"].empty());
  CHECK(j["instances"].get<int>() > 20);
}

TEST_CASE("census summary and records") {
  std::string path = "cli_census_test.jsonl";
  auto r = run_cli({"census", "--n", "4", "--out", path, "--jobs", "2"});
  CHECK(r.code == 0);
  auto j = r.payload();
  CHECK(j["ok"] == true);
  CHECK(j["orders"].size() == 4);
  CHECK(j["orders"][3]["classes"] == 18);
  CHECK(j["unexplained"].empty());

  std::ifstream f(path);
  REQUIRE(f.good());
  std::string line;
  int lines = 0;
  bool saw_family = false;
  while (std::getline(f, line)) {
    ++lines;
    auto rec = json::parse(line);
    CHECK(rec.contains("code"));
    CHECK(rec.contains("sg1"));
    CHECK(rec.contains("n"));
    CHECK(rec.contains("mult_plus1"));
    CHECK(rec.contains("mult_minus1"));
    CHECK(rec.contains("residual"));
    CHECK(rec.contains("verdict"));
    CHECK(rec.contains("witness"));
    if (rec["verdict"] == "FAMILY") {
      saw_family = true;
      CHECK(rec["witness"]["instance"] == "A3(1,1)");
    }
  }
  CHECK(lines == 1 + 2 + 5 + 18);
  CHECK(saw_family);
  std::remove(path.c_str());

  CHECK(run_cli({"census", "--n", "9"}).code == 2);  // above the cap
}

TEST_CASE("census output is byte-identical across job counts") {
  auto a = run_cli({"census", "--n", "4", "--jobs", "1"});
  auto b = run_cli({"census", "--n", "4", "--jobs", "3"});
  CHECK(a.out == b.out);
}

TEST_CASE("forbid verify") {
  auto r = run_cli({"forbid", "verify"});
  CHECK(r.code == 0);
  auto j = r.payload();
  CHECK(j["ok"] == true);
  CHECK(j["items"].size() == 10);
}

TEST_CASE("quotient") {
  auto g = run_cli({"gen", "A2(2,2)"});
  std::string line = g.out.substr(0, g.out.find('\n'));
  auto r = run_cli({"quotient", line, "--partition", "[0-3|4-7]"});
  CHECK(r.code == 0);
  auto j = r.payload();
  CHECK(j["quotient"] == json::parse(R"([["1","4"],["4","-1"]])"));
  CHECK(j["residual"] == json::parse(R"(["-17","0","1"])"));
  CHECK(j["roots_in_spectrum"] == true);

  auto bad = run_cli({"quotient", "SG1 3 -++", "--partition", "[0,2|1]"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("row sum") != std::string::npos);

  CHECK(run_cli({"quotient", line, "--partition", "0-3"}).code == 2);
}
