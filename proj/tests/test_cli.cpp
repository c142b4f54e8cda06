#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "avoid321");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = avoid321::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("enumerate", "[cli]") {
  const auto r = run({"enumerate", "--n", "3", "--stats", "ldes"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "123 ldes=0\n132 ldes=2\n213 ldes=1\n231 ldes=2\n312 ldes=1\n");

  const auto ins = run({"enumerate", "--n", "3", "--stats", "ldes", "--order", "insertion"});
  CHECK(ins.out == "231 ldes=2\n213 ldes=1\n312 ldes=1\n132 ldes=2\n123 ldes=0\n");

  const auto csv = run({"enumerate", "--n", "3", "--stats", "inv,ides", "--format", "csv"});
  CHECK(csv.out.rfind("perm,inv,ides\n\"123\",0,\n", 0) == 0);

  const auto cls = run({"enumerate", "--n", "3", "--B", ""});
  CHECK(cls.out == "123\n132\n312\n");

  const auto js = run({"enumerate", "--n", "2", "--stats", "sign", "--format", "json"});
  CHECK(js.code == 0);
  CHECK(js.out.find("\"perm\":[1,2]") != std::string::npos);
}

TEST_CASE("genfun", "[cli]") {
  CHECK(run({"genfun", "--n", "2"}).out == "z^2 + t1*x*y*z\n");
  CHECK(run({"genfun", "--n", "2", "--spec", "t=1,x=-1,z=1"}).out == "1 - y\n");
  CHECK(run({"genfun", "--n", "2", "--method", "recursive"}).out == "z^2 + t1*x*y*z\n");
  CHECK(run({"genfun", "--n", "2", "--hat", "--spec", "x=1"}).out == "z^2 + y*z\n");
  CHECK(run({"genfun", "--n", "3", "--spec", "t=1,x=1,z=1"}).out == "1 + 2*y + 2*y^2\n");
  const auto js = run({"genfun", "--n", "1", "--format", "json"});
  CHECK(js.out == "{\"terms\":[{\"coeff\":1,\"exp\":{\"z\":1}}]}\n");
  CHECK(run({"genfun", "--n", "2", "--spec", "w=1"}).code == 2);
}

TEST_CASE("biject", "[cli]") {
  const auto r = run({"biject", "--perm", "25134"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("P:\n1 3 4\n2 5\n") != std::string::npos);
  CHECK(r.out.find("Q:\n1 2 5\n3 4\n") != std::string::npos);
  CHECK(r.out.find("T:\n 1  2  5  6  9\n 3  4  7  8 10\n") != std::string::npos);
  CHECK(r.out.find("path: ++--++--+-\n") != std::string::npos);

  const auto back = run({"biject", "--path", "+-"});
  CHECK(back.code == 0);
  CHECK(back.out.rfind("perm: 1\n", 0) == 0);

  const auto js = run({"biject", "--path", "++--++--+-", "--format", "json"});
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j.at("perm") == nlohmann::json::array({2, 5, 1, 3, 4}));
  CHECK(j.at("path_stats").at("tail") == 1);
}

TEST_CASE("verify", "[cli]") {
  const auto r = run({"verify", "--check", "forgetfulness", "--no-timing"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"check\":\"forgetfulness\",\"n\":[1,2],\"status\":\"pass\",\"witness\":{\"B\":[],\"ldes\":\"1\","
        "\"lind_minus_1\":\"y\",\"n\":2}}\n");
  const auto all = run({"verify", "--check", "all", "--max-n", "8", "--no-timing"});
  CHECK(all.code == 0);
  CHECK(std::count(all.out.begin(), all.out.end(), '\n') == 8);
  CHECK(run({"verify", "--check", "all", "--max-n", "8", "--no-timing", "--threads", "3"}).out == all.out);
  const auto text = run({"verify", "--check", "hilbert", "--max-n", "4", "--no-timing", "--format", "text"});
  CHECK(text.out == "PASS hilbert n=1..4\n");
  CHECK(run({"verify", "--check", "forgetfulness", "--max-n", "1"}).code == 1);
}

TEST_CASE("exit codes", "[cli][errors]") {
  CHECK(run({"biject", "--perm", "321"}).code == 5);
  CHECK(run({"verify", "--check", "bogus"}).code == 2);
  CHECK(run({"enumerate", "--n", "17"}).code == 3);
  CHECK(run({"enumerate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"enumerate", "--n", "3", "--stats", "foo"}).code == 2);
  CHECK(run({"enumerate", "--n", "4", "--B", "3"}).code == 2);
  CHECK(run({"biject", "--path", "-+"}).code == 2);
  CHECK(run({"biject"}).code == 2);
  CHECK(run({"enumerate", "--n", "3", "--format", "xml"}).code == 2);
}

TEST_CASE("repeated runs are byte-identical", "[cli]") {
  const std::vector<std::string> args{"genfun", "--n", "6", "--threads", "4"};
  CHECK(run(args).out == run(args).out);
  CHECK(run(args).out == run({"genfun", "--n", "6", "--threads", "1"}).out);
}
