#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(PHASE_AMP_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("cli exit codes") {
  CHECK(run("graph --graph line:4").code == 0);
  CHECK(run("graph --graph line:1").code == 2);
  CHECK(run("graph --graph nowhere.txt").code == 2);
  CHECK(run("nosuchverb").code == 2);
  CHECK(run("amplify --graph line:2 --sequence 1 --bogus").code == 2);
  CHECK(run("hist --graph line:29").code == 3);
  CHECK(run("amplify --uniform 1 --sequence 0").code == 4);
}

TEST_CASE("cli json output") {
  auto r = run("amplify --graph grid:4x4 --successes 10 --tail-at pi");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == "phase-amp/1");
  CHECK(j["probability"].get<double>() == doctest::Approx(0.012053).epsilon(1e-4));

  r = run("twopeak --M 2");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["ratio"].get<double>() == doctest::Approx(256.0 / 7));

  r = run("uniform-asymptotics --M 100 --theta 3pi/4");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).contains("tail"));

  r = run("bounds --graph grid:3x3 --m 2 --phi-r pi/2 --band-theta pi/4");
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["bounds"]["lower"].get<double>() <= j["exact_tail"].get<double>());

  r = run("verify-oracle --max-qubits 3 --max-seq 3 --trials 4");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["max_abs_deviation"].get<double>() < 1e-10);

  r = run("graph --graph line:4 --optima");
  CHECK(nlohmann::json::parse(r.out)["maximizer_count"] == 2);
}

TEST_CASE("cli hist csv") {
  const auto r = run("--format csv hist --graph line:4");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("theta,count\n", 0) == 0);
}
