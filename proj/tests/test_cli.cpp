#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

class Workdir {
 public:
  Workdir() : path_(fs::temp_directory_path() / ("tetmac_cli_test_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~Workdir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content) const {
    std::ofstream(path_ / name) << content;
    return (path_ / name).string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const Workdir& w, const std::string& args, const std::string& stdin_file = "") {
  const std::string err = w.path("stderr.txt");
  std::string cmd = std::string("'") + TETMAC_CLI_PATH + "' " + args + " 2>'" + err + "'";
  if (!stdin_file.empty()) cmd += " <'" + stdin_file + "'";
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  return r;
}

const char* kCornerNode = "4 3 0 0\n1 0 0 0\n2 1 0 0\n3 0 1 0\n4 0 0 1\n";
const char* kCornerEle = "1 4 0\n1 1 2 3 4\n";
const char* kCornerJson = R"({"vertices":[[0,0,0],[1,0,0],[0,1,0],[0,0,1]],"tets":[[0,1,2,3]]})";

bool single_error_line(const std::string& err, const std::string& code) {
  return err.rfind("tetmac: error: " + code + ": ", 0) == 0 && err.find('\n') == err.size() - 1;
}

}  // namespace

TEST_CASE("CLI analyze exit codes") {
  Workdir w;
  const auto node = w.file("m.node", kCornerNode);
  const auto ele = w.file("m.ele", kCornerEle);

  auto r = run(w, "analyze --mesh '" + node + "' '" + ele + "' --gamma 90deg --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.find("mac_ok@1.5707963267948966") != std::string::npos);

  r = run(w, "analyze --mesh '" + node + "' '" + ele + "' --gamma 85deg --format csv");
  CHECK(r.code == 2);

  r = run(w, "analyze --mesh '" + node + "' '" + ele + "' --gamma 85deg 90deg");
  CHECK(r.code == 2);

  r = run(w, "analyze --mesh '" + w.path("missing.node") + "' '" + ele + "' --gamma 90deg");
  CHECK(r.code == 1);
  CHECK(single_error_line(r.err, "IO_ERROR"));
  CHECK(r.out.empty());
}

TEST_CASE("CLI analyze inputs and outputs") {
  Workdir w;
  const auto json = w.file("m.json", kCornerJson);
  const auto node = w.file("m.node", kCornerNode);
  w.file("m.ele", kCornerEle);

  auto a = run(w, "analyze --mesh '" + json + "' --gamma 1.5707963267948966 --format json");
  REQUIRE(a.code == 0);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["elements"][0]["R_T"].get<double>() == doctest::Approx(12));

  auto b = run(w, "analyze --mesh - --gamma 90deg --format json", json);
  CHECK(b.code == 0);
  CHECK(b.out == a.out);

  auto c = run(w, "analyze --mesh '" + node + "' --gamma 90deg --format json");
  CHECK(c.code == 0);
  CHECK(c.out == a.out);

  const auto out = w.path("report.csv");
  auto d = run(w, "analyze --mesh '" + json + "' --gamma 90deg --angle-unit deg --out '" + out + "'");
  CHECK(d.code == 0);
  CHECK(d.out.empty());
  CHECK(slurp(out).find("mac_ok@90,") != std::string::npos);
  CHECK(slurp(out).find("# angle_unit=deg") != std::string::npos);

  // Byte-identical repeated runs.
  CHECK(run(w, "analyze --mesh '" + json + "' --gamma 90deg").out ==
        run(w, "analyze --mesh '" + json + "' --gamma 90deg").out);
}

TEST_CASE("CLI analyze errors") {
  Workdir w;
  const auto bad = w.file("bad.json", R"({"vertices":[[0,0,0]],"tets":[[0,1,2,3]]})");
  auto r = run(w, "analyze --mesh '" + bad + "'");
  CHECK(r.code == 1);
  CHECK(single_error_line(r.err, "INDEX_ERROR"));

  const auto json = w.file("m.json", kCornerJson);
  r = run(w, "analyze --mesh '" + json + "' --gamma 30deg");
  CHECK(r.code == 1);
  CHECK(single_error_line(r.err, "INVALID_GAMMA"));

  r = run(w, "analyze --mesh '" + json + "' --gamma ninety");
  CHECK(r.code == 1);
  CHECK(single_error_line(r.err, "USAGE"));

  r = run(w, "analyze --mesh '" + json + "' --format xml");
  CHECK(r.code == 1);

  r = run(w, "analyze");
  CHECK(r.code == 1);
  CHECK(single_error_line(r.err, "USAGE"));

  r = run(w, "");
  CHECK(r.code == 1);
}

TEST_CASE("CLI constants") {
  Workdir w;
  auto r = run(w, "constants --gamma 90deg");
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["D"].get<double>() == doctest::Approx(15.6787555785165).epsilon(1e-13));
  CHECK(doc["C1"].get<double>() == doctest::Approx(0.707106781186548).epsilon(1e-13));

  r = run(w, "constants --ratio 12");
  REQUIRE(r.code == 0);
  doc = nlohmann::json::parse(r.out);
  CHECK(doc["gamma_uniform"].get<double>() == doctest::Approx(2.88891239844771).epsilon(1e-13));

  r = run(w, "constants --ratio 12 --angle-unit deg");
  doc = nlohmann::json::parse(r.out);
  CHECK(doc["gamma_M"].get<double>() == doctest::Approx(150).epsilon(1e-13));

  CHECK(run(w, "constants --gamma 90deg --ratio 12").code == 1);
  CHECK(run(w, "constants").code == 1);
  r = run(w, "constants --ratio 6");
  CHECK(r.code == 1);
  CHECK(single_error_line(r.err, "INVALID_BOUND"));
  r = run(w, "constants --gamma 0.5");
  CHECK(r.code == 1);
  CHECK(single_error_line(r.err, "INVALID_GAMMA"));
}

TEST_CASE("CLI family and interp") {
  Workdir w;
  auto r = run(w, "family --kind planar-collapse --eps 1 --factor 0.5 --steps 10 --format json");
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["rows"].size() == 10);
  for (std::size_t i = 1; i < 10; ++i)
    CHECK(doc["rows"][i]["ratio_R"].get<double>() > doc["rows"][i - 1]["ratio_R"].get<double>());

  r = run(w, "interp --kind corner-stretch --k 1 --m 1 --p inf --fn sin123 --steps 10");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "index,eps,h_T,ratio_R,error,seminorm_v,rhs,normalized_constant,raw_constant");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 10);

  r = run(w, "interp --kind corner-stretch --k 1 --m 1 --p 2 --fn sin123 --steps 10");
  CHECK(r.code == 1);
  CHECK(single_error_line(r.err, "INADMISSIBLE_EXPONENTS"));
  CHECK(r.err.find("k-m = 0 requires p > 2") != std::string::npos);

  r = run(w, "interp --kind corner-stretch --fn nope");
  CHECK(r.code == 1);
  CHECK(single_error_line(r.err, "INVALID_ARGUMENT"));

  r = run(w, "family --kind sliver");
  CHECK(r.code == 1);
  CHECK(single_error_line(r.err, "INVALID_ARGUMENT"));
}
