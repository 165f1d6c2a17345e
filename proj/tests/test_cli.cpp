#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "lie/serialize.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = lie::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented examples") {
  auto d = run({"desing", "--type", "A", "--rank", "2", "--word", "1 2 1", "--format", "json"});
  CHECK(d.code == lie::cli::kOk);
  auto j = lie::Json::parse(d.out);
  CHECK(j["dimension"] == 3);
  CHECK(j["factors"].size() == 1);

  auto c = run({"codim", "--type", "A", "--rank", "3", "--p", "1", "--pprime", "1"});
  CHECK(c.code == 0);
  CHECK(c.out == "true\n");

  auto h = run({"hilbert", "--type", "A", "--rank", "3", "--p", "1", "--degrees", "2"});
  CHECK(h.code == 0);
  CHECK(h.out == "8\n");
}

TEST_CASE("every subcommand runs in every format") {
  const std::vector<std::vector<std::string>> cmds = {
      {"root-system", "--type", "C", "--rank", "3"},
      {"orbits", "--type", "A", "--rank", "3", "--p", "1", "--pprime", "3"},
      {"codim", "--type", "A", "--rank", "3", "--p", "1", "--pprime", "3"},
      {"levi", "--type", "A", "--rank", "4", "--p", "2", "--pprime", "2"},
      {"nilradical", "--type", "C", "--rank", "2", "--pprime", "1"},
      {"curves", "--type", "A", "--rank", "3", "--p", "1,2,3", "--degrees", "2,0,2"},
      {"hilbert", "--type", "A", "--rank", "2", "--p", "1,2", "--degrees", "1,1"},
      {"desing", "--type", "A", "--rank", "3", "--word", "2 1 3 2"},
      {"refine", "--type", "A", "--rank", "3", "--perm", "3412"},
      {"smooth", "--type", "A", "--rank", "3", "--word", "2 1 3 2"},
      {"minimal", "--type", "G", "--rank", "2", "--word", "1 2"},
  };
  for (const auto& base : cmds) {
    for (std::string fmt : {"text", "json"}) {
      auto args = base;
      args.push_back("--format");
      args.push_back(fmt);
      CAPTURE(base[0]);
      auto r = run(args);
      CHECK(r.code == 0);
      CHECK_FALSE(r.out.empty());
      lie::Json parsed;
      if (fmt == "json") CHECK_NOTHROW(parsed = lie::Json::parse(r.out));
      CHECK(run(args).out == r.out);
    }
  }
}

TEST_CASE("dot output") {
  auto r = run({"root-system", "--type", "G", "--rank", "2", "--format", "dot"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("graph dynkin_G2 {", 0) == 0);
  auto t = run({"desing", "--type", "C", "--rank", "2", "--word", "1 2 1", "--format", "dot"});
  CHECK(t.out.rfind("digraph tower_C2 {", 0) == 0);
  CHECK(run({"hilbert", "--type", "A", "--rank", "2", "--p", "1", "--degrees", "1", "--format", "dot"}).code ==
        lie::cli::kUsage);
}

TEST_CASE("usage errors name the offending flag") {
  auto bad_type = run({"codim", "--type", "Q", "--rank", "3", "--p", "1", "--pprime", "1"});
  CHECK(bad_type.code == lie::cli::kUsage);
  CHECK(bad_type.err.find("--type") != std::string::npos);

  auto bad_node = run({"codim", "--type", "A", "--rank", "3", "--p", "4", "--pprime", "1"});
  CHECK(bad_node.code == lie::cli::kUsage);
  CHECK(bad_node.err.find("--p") != std::string::npos);

  auto bad_word = run({"desing", "--type", "A", "--rank", "2", "--word", "1 x"});
  CHECK(bad_word.code == lie::cli::kUsage);
  CHECK(bad_word.err.find("--word") != std::string::npos);

  auto bad_deg = run({"hilbert", "--type", "A", "--rank", "3", "--p", "1,2", "--degrees", "1"});
  CHECK(bad_deg.code == lie::cli::kUsage);
  CHECK(bad_deg.err.find("--degrees") != std::string::npos);

  CHECK(run({}).code == lie::cli::kUsage);
  CHECK(run({"nosuch"}).code == lie::cli::kUsage);
  CHECK(run({"root-system", "--type", "B", "--rank", "1"}).code == lie::cli::kUsage);
}

TEST_CASE("domain refusals exit with status 2") {
  auto r = run({"levi", "--type", "A", "--rank", "3", "--p", "2", "--pprime", "2", "--format", "json"});
  CHECK(r.code == lie::cli::kRefused);
  auto j = lie::Json::parse(r.out);
  CHECK(j["error"] == "domain_refusal");
  CHECK(j["reason"].get<std::string>().find("node 2") != std::string::npos);

  auto h = run({"hilbert", "--type", "A", "--rank", "3", "--p", "1", "--degrees", "-1"});
  CHECK(h.code == lie::cli::kRefused);
}

TEST_CASE("sweeps over the whole group") {
  auto r = run({"smooth", "--type", "A", "--rank", "3", "--all-w", "--format", "json"});
  CHECK(r.code == 0);
  auto j = lie::Json::parse(r.out);
  CHECK(j.size() == 24);
  CHECK(run({"smooth", "--type", "A", "--rank", "3", "--all-w", "--format", "json"}).out == r.out);
}

TEST_CASE("enumeration cap from the environment") {
  ::setenv("LIE_MAX_WEYL", "10", 1);
  auto r = run({"smooth", "--type", "A", "--rank", "3", "--all-w", "--format", "json"});
  ::unsetenv("LIE_MAX_WEYL");
  CHECK(r.code == lie::cli::kRefused);
  CHECK(lie::Json::parse(r.out)["error"] == "enumeration_limit");
}
