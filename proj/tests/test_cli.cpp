#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "abcover/cli.hpp"

using abcover::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "abcover");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture_path(const char* name) {
  return (std::filesystem::path(ABCOVER_SOURCE_DIR) / "fixtures" / name).string();
}

std::filesystem::path temp_file(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "abcover_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("spectrum") {
  const auto r7 = call({"spectrum", "7"});
  CHECK(r7.code == 0);
  CHECK(r7.out == "infeasible (P_2 non-integral)\n");
  const auto r8 = call({"spectrum", "8"});
  CHECK(r8.code == 0);
  CHECK(r8.out == "{5, 3^3, 2^3}\n");
  const auto ro = call({"spectrum", "10", "--oracle"});
  CHECK(ro.code == 0);
  CHECK(ro.out.find("{4^4") != std::string::npos);
  CHECK(call({"spectrum", "14", "--oracle"}).code == 2);
  CHECK(call({"spectrum", "1"}).code == 2);
  CHECK(call({"spectrum"}).code == 2);
}

TEST_CASE("usage errors") {
  const auto none = call({});
  CHECK(none.code == 2);
  CHECK(none.err.find("Usage") != std::string::npos);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"classify", "--min", "x"}).code == 2);
  CHECK(call({"classify", "--min", "8", "--max", "4"}).code == 2);
  CHECK(call({"classify", "--group", "4,2"}).code == 2);
  CHECK(call({"solve", "--group", "2,2"}).code == 2);
  CHECK(call({"solve", "--group", "2,2", "--fixture", "deg08"}).code == 2);
  CHECK(call({"solve", "--group", "2,2", "--g5", "1,1", "--s1", "1,1"}).code == 2);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"--version"}).out == "1.0.0\n");
}

TEST_CASE("fixtures") {
  const auto r = call({"fixtures"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all fixtures verified") != std::string::npos);
  for (const auto* n : {"deg02", "deg04", "deg08", "deg16", "deg32"}) {
    CHECK(r.out.find(std::string("PASS ") + n) != std::string::npos);
  }
  const auto j = nlohmann::json::parse(call({"fixtures", "--json"}).out);
  CHECK(j["fixtures"].size() == 7);
}

TEST_CASE("classify writes JSON and CSV") {
  const auto r = call({"classify", "--min", "2", "--max", "8"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["feasible_degrees"] == nlohmann::json::array({2, 4, 6, 8}));
  CHECK(j["schema_version"] == "1.0");
  CHECK_FALSE(j["degrees"][0].contains("wall_seconds"));

  const auto out = temp_file("r.json");
  const auto r2 = call({"classify", "--min", "2", "--max", "6", "--out", out.string(), "--timing"});
  CHECK(r2.code == 0);
  CHECK(r2.out.rfind("degree,feasible,witnesses,smooth\n", 0) == 0);
  std::ifstream csv(std::filesystem::path(out).replace_extension(".csv"));
  std::string header;
  std::getline(csv, header);
  CHECK(header == "degree,feasible,witnesses,smooth");
  std::ifstream js(out);
  const auto j2 = nlohmann::json::parse(js);
  CHECK(j2["degrees"][0].contains("wall_seconds"));
  CHECK(j2["degrees"][4]["flags"][0] == "smoothness unsupported / terminality not established");
}

TEST_CASE("solve") {
  const auto r = call({"solve", "--group", "2,2,2,2,2", "--fixture", "deg32"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["reference_match"] == "exact");
  CHECK(j["complete"] == true);
  const auto r4 = call({"solve", "--group", "2,2", "--g5", "1,1", "--s1", "1,0"});
  CHECK(r4.code == 0);
  const auto j4 = nlohmann::json::parse(r4.out);
  REQUIRE(j4["solutions"].size() == 1);
  CHECK(j4["solutions"][0]["verified"] == true);
  const auto rc = call({"solve", "--group", "2,2,2", "--from-cover", fixture_path("deg08.cover")});
  CHECK(rc.code == 0);
}

TEST_CASE("verify and invariants") {
  const auto ok = call({"verify", fixture_path("deg16.cover"), "--trace"});
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["ok"] == true);
  CHECK(j["smoothness_detail"]["strata"].size() == 21 + 35);

  const auto bad = temp_file("bad.cover");
  std::ofstream(bad) << "group: 2\ncomponent: 1 ; 8\n";
  const auto rb = call({"verify", bad.string()});
  CHECK(rb.code == 1);
  CHECK(nlohmann::json::parse(rb.out)["ok"] == false);

  const auto broken = temp_file("broken.cover");
  std::ofstream(broken) << "group: 2\ncomponent: 0 ; 8\n";
  const auto rx = call({"verify", broken.string()});
  CHECK(rx.code == 1);
  CHECK(rx.err.find(":2:") != std::string::npos);

  const auto inv = call({"invariants", fixture_path("deg08.cover")});
  CHECK(inv.code == 0);
  const auto ji = nlohmann::json::parse(inv.out);
  CHECK(ji["invariants"]["P3"] == 35);
  CHECK(ji["pushforward_twists"] == nlohmann::json::array({0, -2, -2, -2, -3, -3, -3, -5}));
}

TEST_CASE("bounds") {
  const auto r = call({"bounds", "--pg", "4", "--q", "2", "--chi-omega", "5", "--k3", "360", "--bpf"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["my_degree_bound"]["value"] == 360);
  CHECK(j["case_bounds"]["q_le_2"]["value"] == 360);
  CHECK(j["case_bounds"]["albanese_dim_ge_2"]["value"] == 288);
  CHECK(j["case_bounds"]["albanese_dim_1"]["applicable"] == false);
  CHECK(j["chi_upper_bound"] == 5);
  CHECK(j["equality_fingerprint"] == true);
  const auto r6 = call({"bounds", "--pg", "6", "--q", "3", "--dim-y", "1", "--pg-f", "3"});
  CHECK(nlohmann::json::parse(r6.out)["case_bounds"]["albanese_dim_1"]["value"] == 192);
}
