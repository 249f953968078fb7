#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfcalc/cli.hpp"

using namespace hopfcalc;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hopfcalc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(HOPFCALC_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = "test_cli_" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("compute prints dimensions") {
  Run r = run({"compute", "--corpus", "SL2_F3", "--prime", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("h1 = 1, h2 = 1 (exact)") != std::string::npos);

  Run f = run({"compute", "--pres", data("free2.pres"), "--prime", "5"});
  CHECK(f.code == 0);
  CHECK(f.out.find("h1 = 2, h2 = 0 (exact)") != std::string::npos);
}

TEST_CASE("text bound marker agrees with json kind") {
  Run text = run({"compute", "--corpus", "SL2_Z", "--prime", "2"});
  Run js = run({"compute", "--corpus", "SL2_Z", "--prime", "2", "--format", "json"});
  REQUIRE(text.code == 0);
  REQUIRE(js.code == 0);
  auto j = nlohmann::json::parse(js.out);
  bool upper = j["h2_kind"] == "upper_bound";
  CHECK(upper == (text.out.find("≤") != std::string::npos));
  CHECK(j["h1_dim"] == 1);
}

TEST_CASE("compute output formats") {
  Run csv = run({"compute", "--corpus", "SL2_F2", "--primes", "2,3", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out ==
        "group,prime,n_generators,h1_dim,dim_A,rank_image,h2_value,h2_kind\n"
        "SL2_F2,2,2,1,2,1,1,exact\n"
        "SL2_F2,3,2,0,2,2,0,exact\n");
  Run md = run({"compute", "--corpus", "SL2_F2", "--prime", "2", "--format", "markdown"});
  CHECK(md.out.find("| SL2_F2 | 2 | 1 | 1 |") != std::string::npos);
  Run gens = run({"compute", "--corpus", "SL2_F2", "--prime", "2", "--generators"});
  CHECK(gens.out.find("candidates:") != std::string::npos);
}

TEST_CASE("compute dump files") {
  Run r = run({"compute", "--corpus", "SL2_Z", "--prime", "2", "--dump-matrix", "test_cli_m.csv",
               "--dump-rules", "test_cli_rules.txt"});
  REQUIRE(r.code == 0);
  std::ifstream m("test_cli_m.csv");
  std::stringstream ms;
  ms << m.rdbuf();
  CHECK(ms.str().find(',') != std::string::npos);
  std::ifstream rules("test_cli_rules.txt");
  std::string first;
  std::getline(rules, first);
  CHECK(first.rfind("# confluent:", 0) == 0);
  std::remove("test_cli_m.csv");
  std::remove("test_cli_rules.txt");
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run({"table", "--primes", ""}).code == 1);
  CHECK(run({"compute", "--corpus", "SL2_Z", "--prime", "4"}).code == 1);
  CHECK(run({"compute", "--corpus", "SL2_Z"}).code == 1);
  CHECK(run({"compute", "--prime", "2"}).code == 1);
  CHECK(run({"compute", "--corpus", "SL2_Z", "--pres", data("free2.pres"), "--prime", "2"}).code ==
        1);
  CHECK(run({"compute", "--corpus", "SL2_Z", "--prime", "2", "--primes", "3"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"compute", "--corpus", "SL2_Z", "--prime", "2", "--format", "yaml"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("input errors exit with 2") {
  std::string bad = temp_file("bad.pres", "gens: a\nrel: a*b\n");
  Run r = run({"compute", "--pres", bad, "--prime", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2, column 8") != std::string::npos);
  CHECK(run({"compute", "--pres", "no/such/file", "--prime", "2"}).code == 2);
  CHECK(run({"compute", "--corpus", "NOPE", "--prime", "2"}).code == 2);
  std::remove(bad.c_str());
}

TEST_CASE("simplify applies the 14-to-6 map") {
  Run r = run({"simplify", "--corpus", "SL2Z7Z7_14GEN", "--map", data("sl2z7_14to6.map")});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("# 6 generators, ", 0) == 0);
  CHECK(r.out.find("gens: z u1 u2 u3 a b1") != std::string::npos);

  std::string id = temp_file("id.map", "targets: a b\nmap: a -> a\nmap: b -> b\n");
  Run same = run({"simplify", "--corpus", "SL2_Z", "--map", id});
  CHECK(same.code == 0);
  CHECK(same.out == "# 2 generators, 3 relators\ngens: a b\nrel: a^4\nrel: b^6\nrel: a^2*b^-3\n");

  std::string absent = temp_file("absent.map", "targets: a b\nmap: a -> a\nmap: b -> b\nmap: c -> a\n");
  CHECK(run({"simplify", "--corpus", "SL2_Z", "--map", absent}).code == 2);
  CHECK(run({"simplify", "--corpus", "SL2_Z"}).code == 1);
  std::remove(id.c_str());
  std::remove(absent.c_str());
}

TEST_CASE("oracle-check exit codes") {
  Run ok = run({"oracle-check", "--corpus", "SL2_F2", "--primes", "2,3"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("SL2_F2 2 1 1 exact 1 1") != std::string::npos);
  Run inf = run({"oracle-check", "--corpus", "SL2_Z", "--prime", "2"});
  CHECK(inf.code == 3);
  CHECK(inf.err.find("infinite group") != std::string::npos);
}

TEST_CASE("table output is deterministic") {
  std::vector<std::string> args{"table", "--groups", "SL2_F2,SL2_Z,PSL2_Z", "--primes", "2,3",
                                "--format", "csv"};
  Run a = run(args);
  Run b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("quantity,group,p2,p3\nh1,SL2_F2,1,0\n", 0) == 0);
  Run c = run({"compute", "--corpus", "GL2_Z", "--primes", "2,3", "--format", "json"});
  Run d = run({"compute", "--corpus", "GL2_Z", "--primes", "2,3", "--format", "json"});
  CHECK(c.out == d.out);
}
