#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli.hpp"

using namespace ucs;
using namespace ucs::cli;

namespace {

struct Output {
  int status;
  std::string out;
  std::string err;
};

Output run_config(const RunConfig& config) {
  std::ostringstream out, err;
  const int status = run(config, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

RunConfig config_for(int n, Mode mode) {
  RunConfig c;
  c.n = n;
  c.mode = mode;
  return c;
}

}  // namespace

TEST_CASE("count mode prints one report row") {
  const Output o = run_config(config_for(3, Mode::count));
  CHECK(o.status == 0);
  CHECK(lines(o.out) == std::vector<std::string>{
                            "n\tucs_classes\tucs_labeled\tmoore_classes\tmoore_labeled\tsparse_classes",
                            "3\t14\t45\t19\t61\t0"});
}

TEST_CASE("emit-reps streams canonical strings") {
  CHECK(lines(run_config(config_for(2, Mode::emit_reps)).out) == std::vector<std::string>{"3", "3,1", "3,1,2"});

  RunConfig labeled = config_for(2, Mode::emit_reps);
  labeled.labeled = true;
  CHECK(lines(run_config(labeled).out) == std::vector<std::string>{"2 3", "1 3,1", "2 3,1,2"});

  RunConfig moore = config_for(2, Mode::emit_reps);
  moore.moore = true;
  CHECK(lines(run_config(moore).out) == std::vector<std::string>{"3,0", "3,2,0", "3,1,2,0"});

  RunConfig sparse = config_for(4, Mode::emit_reps);
  sparse.sparse_only = true;
  CHECK(lines(run_config(sparse).out).size() == 2);
}

TEST_CASE("report mode covers 1..n") {
  const auto rows = lines(run_config(config_for(4, Mode::report)).out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[2] == "2\t3\t4\t5\t7\t0");
  CHECK(rows[4] == "4\t165\t2271\t184\t2480\t2");
}

TEST_CASE("split syntax") {
  const SplitSpec s = parse_split("4/1/2");
  CHECK(s.modulus == 4);
  CHECK(s.residue == 1);
  CHECK(s.depth == 2);
  CHECK(parse_split("10/3").depth == 2);
  for (const char* bad : {"", "4", "4/4/2", "0/0/2", "4/1/0", "a/1/2", "4/1/2/3", "4//2", "4/1/999"}) {
    CHECK_THROWS_AS(parse_split(bad), std::invalid_argument);
  }
  CHECK(parse_mode("emit-reps") == Mode::emit_reps);
  CHECK_THROWS_AS(parse_mode("list"), std::invalid_argument);
}

TEST_CASE("shards merge to the unsplit count") {
  const auto dir = std::filesystem::temp_directory_path() / "ucsenum_cli_test";
  std::filesystem::create_directories(dir);
  RunConfig merge_config;
  merge_config.mode = Mode::merge;
  for (std::uint64_t residue = 0; residue < 4; ++residue) {
    RunConfig c = config_for(5, Mode::count);
    c.splits = {SplitSpec{4, residue, 2}};
    c.output = (dir / ("shard" + std::to_string(residue) + ".tsv")).string();
    REQUIRE(run_config(c).status == 0);
    merge_config.inputs.push_back(c.output);
  }
  const Output merged = run_config(merge_config);
  CHECK(merged.status == 0);
  CHECK(lines(merged.out).back() == "5\t14480\t1373701\t14664\t1385552\t27");
  std::filesystem::remove_all(dir);
}

TEST_CASE("shard emit-reps outputs partition the unsplit output") {
  auto whole = lines(run_config(config_for(5, Mode::emit_reps)).out);
  std::vector<std::string> joined;
  for (std::uint64_t residue = 0; residue < 3; ++residue) {
    RunConfig c = config_for(5, Mode::emit_reps);
    c.splits = {SplitSpec{3, residue, 3}};
    const auto part = lines(run_config(c).out);
    joined.insert(joined.end(), part.begin(), part.end());
  }
  std::sort(whole.begin(), whole.end());
  std::sort(joined.begin(), joined.end());
  CHECK(joined == whole);
}

TEST_CASE("invalid configurations fail with a diagnostic") {
  for (int n : {0, 8, -1}) {
    const Output o = run_config(config_for(n, Mode::count));
    CHECK(o.status != 0);
    CHECK(o.err.find("n must be in") != std::string::npos);
  }
  RunConfig unwritable = config_for(2, Mode::count);
  unwritable.output = "/nonexistent-dir/out.tsv";
  const Output o = run_config(unwritable);
  CHECK(o.status != 0);
  CHECK(o.err.find("cannot write") != std::string::npos);

  RunConfig bad_split = config_for(3, Mode::count);
  bad_split.splits = {SplitSpec{2, 5, 1}};
  CHECK(run_config(bad_split).status != 0);

  RunConfig no_inputs;
  no_inputs.mode = Mode::merge;
  CHECK(run_config(no_inputs).status != 0);
}
