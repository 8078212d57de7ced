#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + LSP_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), got);
  int st = pclose(f);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string tmp(const std::string& name) { return (std::filesystem::temp_directory_path() / ("lsp_cli_" + name)).string(); }

}

TEST_SUITE("cli") {

TEST_CASE("oracle csv") {
  auto r = run("oracle --p 17 --sign + --n-max 100 --format csv");
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 102);
  CHECK(ls[0] == "n,value");
  CHECK(ls[18] == "17,0");
  CHECK(ls[1] == "0,1");
  CHECK(r.out.find('\r') == std::string::npos);

  auto r5 = run("oracle --p 5 --sign - --n-max 50");
  CHECK(r5.code == 0);
  CHECK(lines(r5.out)[7] == "6,0");
  auto r13 = run("oracle --p 13 --sign + --n-max 1");
  CHECK(lines(r13.out)[2] == "1,1");
}

TEST_CASE("oracle json matches csv and is deterministic") {
  auto csv = run("oracle --p 17 --sign - --n-max 400");
  auto js = run("oracle --p 17 --sign - --n-max 400 --format json");
  REQUIRE(js.code == 0);
  auto j = nlohmann::json::parse(js.out);
  CHECK(j["p"] == 17);
  CHECK(j["sign"] == "-");
  CHECK(j["n_max"] == 400);
  auto ls = lines(csv.out);
  REQUIRE(j["values"].size() + 1 == ls.size());
  for (std::size_t n = 0; n < j["values"].size(); ++n) {
    const auto& row = j["values"][n];
    CHECK(row[0] == n);
    CHECK(ls[n + 1] == std::to_string(n) + "," + row[1].get<std::string>());
  }
  CHECK(run("oracle --p 17 --sign - --n-max 400").out == csv.out);
}

TEST_CASE("oracle writes files") {
  std::string path = tmp("oracle.csv");
  std::filesystem::remove(path);
  auto r = run("oracle --p 5 --sign + --n-max 20 --out " + path);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == run("oracle --p 5 --sign + --n-max 20").out);
  std::filesystem::remove(path);
}

TEST_CASE("usage errors") {
  CHECK(run("oracle --p 7 --n-max 10").code == 2);
  CHECK(run("oracle --p 15 --n-max 10").code == 2);
  CHECK(run("oracle --p 17 --sign x --n-max 10").code == 2);
  CHECK(run("oracle --p 17").code == 2);
  CHECK(run("oracle --p 17 --n-max 10 --format xml").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("verify --suite nope").code == 2);
  CHECK(run("--precision 8 oracle --p 17 --n-max 3").code == 2);
  CHECK(run("oracle --p 17 --n-max 3", "LSP_PRECISION_BITS=12").code == 2);
  CHECK(run("oracle --p 17 --n-max 3", "LSP_PRECISION_BITS=256").code == 0);
  CHECK(run("scan --p-min 30 --p-max 10").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("verify tau quick") {
  std::string path = tmp("tau.json");
  auto r = run("verify --suite tau --scale quick --report " + path);
  CHECK(r.code == 0);
  CHECK(r.out.find("0 fail") != std::string::npos);
  std::ifstream f(path);
  auto j = nlohmann::json::parse(f);
  CHECK(j["suite"] == "tau");
  CHECK(j["summary"]["fail"] == 0);
  std::filesystem::remove(path);
}

TEST_CASE("verify report on stdout carries failures") {
  auto r = run("verify --suite dedekind --scale quick --report -");
  CHECK(r.code == 1);
  auto pos = r.out.find("{\n");
  REQUIRE(pos != std::string::npos);
  auto j = nlohmann::json::parse(r.out.substr(pos));
  CHECK(j["summary"]["fail"] == 2);
}

TEST_CASE("scan") {
  auto r = run("scan --p-min 5 --p-max 17 --sign + --n-max 5000");
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0] == "p,sign,modulus,n_min,n_max,vanishing_residues");
  CHECK(ls[1] == "5,+,10,50,5000,2");
  CHECK(ls[2] == "13,+,26,50,5000,");
  CHECK(ls[3] == "17,+,34,50,5000,17 19 25 27");
  CHECK(lines(run("scan --p-min 29 --p-max 29 --n-max 5000").out)[1] == "29,+,58,58,5000,");
  CHECK(lines(run("scan --p-min 5 --p-max 5 --sign - --n-max 5000").out)[1] == "5,-,10,50,5000,6");
}

}
