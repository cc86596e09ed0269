#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include <json.hpp>

namespace {

const std::filesystem::path kData = CYCLEMOTIVE_TEST_DATA;
const std::string kCli = CYCLEMOTIVE_CLI;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = "cd '" + kData.string() + "' && " + env + " '" + kCli + "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// JSON output is canonical: parsing and re-dumping reproduces it exactly.
void check_canonical(const Run& r) {
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.dump(2) + "\n" == r.out);
}

}  // namespace

TEST_CASE("motive command") {
  CHECK(run("motive --measure euler torus1.json").out == "0\n");
  const auto cone_union = run("motive --measure e-poly cone-elliptic-union-p2.json");
  CHECK(cone_union.code == 0);
  CHECK(cone_union.out == "1+u+v+uv-u^2*v-u*v^2+2u^2*v^2\n");
  CHECK(run("motive --measure count:2 p2.json").out == "7\n");
  CHECK(run("motive --measure h-tilde cone-elliptic-union-p2.json").out == "4\n");
  CHECK(run("motive --measure count-poly p2.json").out == "1+L+L^2\n");
  CHECK(run("motive p2.json").out == "1+uv+u^2*v^2\n");
}

TEST_CASE("motive command errors") {
  CHECK(run("motive --measure count-poly elliptic.json").code == 3);
  CHECK(run("motive --measure betti p2.json").code == 3);
  CHECK(run("motive unknown-leaf.json").code == 3);
  CHECK(run("motive does-not-exist.json").code == 2);
  CHECK(run("motive bad-syntax.fan.json").code == 2);
  CHECK(run("motive --measure count:6 p2.json").code == 2);
}

TEST_CASE("chow command") {
  const auto both = run("chow -p 1 -d 2 -n 3 --method both");
  CHECK(both.code == 0);
  CHECK(both.out == "21\n");
  CHECK(run("chow -p 0 -n 2 --series 3").out == "1,3,6,10\n");
  CHECK(run("chow -p 1 -d 2 -n 3 --htilde").out == "21\n");

  const auto cong = run("chow -p 1 -d 1 -n 3 --congruence 3,1");
  CHECK(cong.code == 0);
  CHECK(cong.out.find("N=130") != std::string::npos);
  CHECK(cong.out.find("verified") != std::string::npos);

  const auto big = run("chow -p 1 -d 2 -n 3 --congruence 2");
  CHECK(big.code == 0);
  CHECK(big.out.find("untestable at desk scale") != std::string::npos);

  CHECK(run("chow -p 3 -d 1 -n 2").code == 2);
  CHECK(run("chow -p 1 -n 3").code == 2);
  CHECK(run("chow -p 1 -d 1 -n 3 --method fancy").code == 2);
  CHECK(run("chow -p x -d 1 -n 3").code == 2);
}

TEST_CASE("toric command") {
  CHECK(run("toric p2.fan.json --lambda").out == "3\n");
  CHECK(run("toric p2.fan.json --e-poly").out == "1+uv+u^2*v^2\n");
  CHECK(run("toric p2.fan.json").out == "1,3,3\n");
  CHECK(run("toric p1xp1.fan.json --count 2").out == "9\n");
  const auto s = run("toric p1xp1.fan.json --euler-series 1,2,p1xp1-bidegree.grading.json");
  CHECK(s.code == 0);
  CHECK(s.out == "1+2*x1+2*x2+3*x1^2+4*x1*x2+3*x2^2\n");
  CHECK(run("toric p2.fan.json --lambda --e-poly").out == "lambda: 3\ne-poly: 1+uv+u^2*v^2\n");
}

TEST_CASE("toric command errors") {
  CHECK(run("toric bad-nonprimitive.fan.json --lambda").code == 2);
  CHECK(run("toric bad-syntax.fan.json").code == 2);
  CHECK(run("toric p2.fan.json --count 6").code == 2);
  CHECK(run("toric p2.fan.json --euler-series 3,2").code == 2);
}

TEST_CASE("verify command") {
  const auto one = run("verify --suite hodge-remark");
  CHECK(one.code == 0);
  CHECK(one.out.rfind("PASS hodge-remark", 0) == 0);
  CHECK(run("verify --suite lawson-yau").code == 0);
  CHECK(run("verify --suite congruences").code == 0);
  CHECK(run("verify --suite nonsense").code == 3);
}

TEST_CASE("JSON output is canonical") {
  for (const char* args :
       {"--json motive --measure e-poly cone-elliptic-union-p2.json", "--json motive --measure h-tilde p2.json",
        "--json motive --measure count-poly p2.json", "--json motive --measure euler p2.json",
        "--json chow -p 1 -d 1 -n 3 --method both --series 4 --htilde --congruence 3",
        "--json toric p1xp1.fan.json --census --lambda --e-poly --count 3,2 --euler-series 1,3",
        "--json verify --suite all"}) {
    const auto r = run(args);
    CAPTURE(args);
    CHECK(r.code == 0);
    check_canonical(r);
  }
}

TEST_CASE("JSON verify report is deterministic") {
  const auto a = run("--json verify --suite all");
  const auto b = run("--json verify --suite all");
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  // Elapsed times are left out; only the fixed limits appear.
  CHECK(j.dump().find("\"seconds\"") == std::string::npos);
}

TEST_CASE("budget environment variable") {
  CHECK(run("chow -p 1 -d 1 -n 3 --congruence 3").out.find("brute force") != std::string::npos);
  // Over budget the count falls back to the closed form.
  const auto capped = run("chow -p 1 -d 1 -n 3 --congruence 3", "CYCLEMOTIVE_BUDGET=10");
  CHECK(capped.code == 0);
  CHECK(capped.out.find("gaussian binomial") != std::string::npos);
  CHECK(capped.out.find("N=130") != std::string::npos);
  CHECK(run("chow -p 1 -d 1 -n 3 --congruence 3", "CYCLEMOTIVE_BUDGET=junk").code == 2);
}
