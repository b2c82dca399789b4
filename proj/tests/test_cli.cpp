#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using schubert::cli::kExitDomain;
using schubert::cli::kExitMismatch;
using schubert::cli::kExitOk;
using schubert::cli::kExitParse;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = schubert::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(const std::vector<std::string>& args, int expected = kExitOk) {
  const auto r = run(args);
  REQUIRE(r.code == expected);
  return Json::parse(r.out);
}

class TempFile {
 public:
  TempFile(const std::string& name, const std::string& text)
      : path_(std::filesystem::temp_directory_path() / ("schubert_cli_" + name)) {
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
  ~ScopedEnv() { unsetenv(name_); }

 private:
  const char* name_;
};

}  // namespace

TEST_CASE("decompose") {
  const auto r = run({"decompose", "--type", "A", "--rank", "3", "--w", "1 3 2 1 3", "--i", "1", "--j", "2", "--q", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("u          1 3 2\n") != std::string::npos);
  CHECK(r.out.find("z          1\n") != std::string::npos);
  CHECK(r.out.find("v          3\n") != std::string::npos);
  CHECK(r.out.find("thickness  2\n") != std::string::npos);

  const auto j = run_json(
      {"decompose", "--type", "A", "--rank", "3", "--w", "1 3 2 1 3", "--i", "1", "--j", "2", "--q", "2", "--format", "json"});
  CHECK(j["u"] == "1 3 2");
  CHECK(j["z"] == "1");
  CHECK(j["v"] == "3");
  CHECK(j["thickness"] == 2);

  const auto id = run_json({"decompose", "--rank", "3", "--w", "", "--i", "1", "--j", "2", "--q", "5", "--format", "json"});
  CHECK(id["u"] == "");
  CHECK(id["z"] == "");
  CHECK(id["v"] == "");
  CHECK(id["thickness"] == 1);
  CHECK(run({"decompose", "--rank", "3", "--i", "1", "--j", "2"}).out.find("u          (identity)") != std::string::npos);

  CHECK(run({"decompose", "--rank", "3", "--w", "1", "--i", "1", "--j", "1"}).code == kExitDomain);
}

TEST_CASE("thickness") {
  const auto r = run({"thickness", "--rank", "3", "--w", "1 3 2 1 3", "--i", "1", "--j", "2", "--q", "3^2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "9\n");
  CHECK(run({"thickness", "--rank", "3", "--w", "1 3 2 1 3", "--i", "1", "--j", "2", "--q", "3,2"}).out == "9\n");
  CHECK(run({"thickness", "--type", "B", "--rank", "2", "--w", "1 2 1 2", "--i", "1", "--j", "2", "--q", "4"}).code ==
        kExitOk);
  CHECK(run({"thickness", "--rank", "3", "--w", "1", "--i", "1", "--j", "2", "--q", "6"}).code == kExitDomain);
}

TEST_CASE("word and argument errors") {
  const auto bad = run({"decompose", "--rank", "3", "--w", "1 4", "--i", "1", "--j", "2"});
  CHECK(bad.code == kExitParse);
  CHECK(bad.err.find("4") != std::string::npos);
  CHECK(run({"decompose", "--rank", "3", "--w", "1 x", "--i", "1", "--j", "2"}).code == kExitParse);
  CHECK(run({"decompose", "--rank", "3", "--i", "1"}).code == kExitParse);
  CHECK(run({"nonsense"}).code == kExitParse);
  CHECK(run({}).code == kExitParse);
  CHECK(run({"census", "--rank", "2", "--q", "2", "--format", "xml"}).code == kExitParse);
  CHECK(run({"decompose", "--type", "E", "--rank", "6", "--i", "1", "--j", "2"}).code == kExitDomain);
  CHECK(run({"verify", "--n", "3", "--q", "two", "--w", "1", "--i", "1", "--j", "2"}).code == kExitParse);
}

TEST_CASE("verify") {
  const auto sweep = run_json({"verify", "--n", "3", "--q", "2", "--all-w", "--all-ij", "--format", "json"});
  CHECK(sweep["checked"] == 12);
  CHECK(sweep["all_agree"] == true);

  const auto ex = run_json({"verify", "--n", "4", "--q", "2", "--w", "1 3 2 1 3", "--i", "1", "--j", "2", "--format", "json"});
  CHECK(ex["w"] == "1 3 2 1 3");
  CHECK(ex["formula"] == 2);
  CHECK(ex["lines"] == 8);
  CHECK(ex["all_agree"] == true);

  CHECK(run({"verify", "--rank", "2", "--q", "3", "--all-w", "--all-ij"}).code == kExitOk);
  CHECK(run({"verify", "--n", "4", "--q", "2", "--w", "1 2 1", "--i", "1", "--j", "2", "--guard", "4"}).code ==
        kExitDomain);
  CHECK(run({"verify", "--n", "4", "--rank", "2", "--q", "2", "--w", "", "--i", "1", "--j", "2"}).code == kExitParse);
  CHECK(run({"verify", "--type", "B", "--rank", "2", "--q", "2", "--w", "", "--i", "1", "--j", "2"}).code ==
        kExitDomain);
}

TEST_CASE("SCHUBERT_GUARD overrides the default guard") {
  const std::vector<std::string> args{"verify", "--n", "4", "--q", "2", "--w", "1 2 1", "--i", "1", "--j", "2"};
  CHECK(run(args).code == kExitOk);
  {
    const ScopedEnv env("SCHUBERT_GUARD", "4");
    CHECK(run(args).code == kExitDomain);
    auto with_flag = args;
    with_flag.insert(with_flag.end(), {"--guard", "8"});
    CHECK(run(with_flag).code == kExitOk);
  }
  {
    const ScopedEnv env("SCHUBERT_GUARD", "lots");
    CHECK(run(args).code == kExitParse);
  }
}

TEST_CASE("census") {
  const auto q3 = run_json({"census", "--rank", "2", "--q", "3", "--format", "json"});
  int pair12 = 0;
  for (const auto& t : q3) pair12 += t["i"] == 1 && t["j"] == 2;
  CHECK(pair12 == 3);
  const auto q2 = run_json({"census", "--rank", "2", "--q", "2", "--format", "json"});
  CHECK(q2.size() > q3.size());

  const auto csv = run({"census", "--rank", "2", "--q", "3", "--format", "csv"});
  CHECK(csv.code == kExitOk);
  CHECK(csv.out.rfind("w,i,j,len_z,thickness\n", 0) == 0);

  CHECK(run({"census", "--rank", "1", "--q", "2"}).code == kExitDomain);
  CHECK(run({"census", "--rank", "5", "--q", "2", "--guard", "100"}).code == kExitDomain);
}

TEST_CASE("cell") {
  const auto j = run_json({"cell", "--n", "3", "--q", "2", "--w", "1 2", "--format", "json"});
  CHECK(j["points"].size() == 4);
  const auto table = run({"cell", "--n", "3", "--q", "4", "--w", "1"});
  CHECK(table.code == kExitOk);
  CHECK(table.out.find(": 4 points") != std::string::npos);
}

TEST_CASE("lattice-check") {
  const auto j = run_json({"lattice-check", "--n", "3", "--q", "2", "--format", "json"});
  CHECK(j["elements"] == 16);
  CHECK(j["all_pass"] == true);
  CHECK(j["projective"]["all_pass"] == true);

  const auto sampled =
      run_json({"lattice-check", "--n", "4", "--q", "3", "--samples", "10000", "--seed", "5", "--format", "json"});
  CHECK(sampled["mode"] == "sampled");
  CHECK(sampled["all_pass"] == true);

  const auto line = run({"lattice-check", "--n", "2", "--q", "3"});
  CHECK(line.code == kExitOk);
  CHECK(line.out.find("not applicable") != std::string::npos);
  CHECK(run({"lattice-check", "--n", "8", "--q", "2", "--guard", "10"}).code == kExitDomain);
}

TEST_CASE("ovoid-check") {
  const TempFile quadric("quadric.json",
                         R"({"field": {"p": 2, "k": 1}, "n": 4, "points": [[1,0,0,0],[0,1,0,0],[1,1,1,0],[1,1,0,1],[1,1,1,1]]})");
  const auto good = run_json({"ovoid-check", "--points", quadric.path(), "--format", "json"});
  CHECK(good["o1"] == true);
  CHECK(good["o2"] == true);
  CHECK(good["is_ovoid"] == true);

  const TempFile collinear("collinear.json",
                           R"({"field": {"p": 2, "k": 1}, "n": 4, "points": [[1,0,0,0],[0,1,0,0],[1,1,0,0]]})");
  const auto bad = run({"ovoid-check", "--points", collinear.path()});
  CHECK(bad.code == kExitOk);
  CHECK(bad.out.find("O1      FAIL  line") != std::string::npos);

  const TempFile empty("empty.json", "");
  const auto vacuous = run({"ovoid-check", "--points", empty.path()});
  CHECK(vacuous.code == kExitOk);
  CHECK(vacuous.err.find("warning") != std::string::npos);
  CHECK(vacuous.out.find("ovoid   yes") != std::string::npos);

  const TempFile malformed("malformed.json", "{\"field\": ");
  CHECK(run({"ovoid-check", "--points", malformed.path()}).code == kExitParse);
  CHECK(run({"ovoid-check", "--points", "/nonexistent/points.json"}).code == kExitParse);
}

TEST_CASE("ovoid-search") {
  const auto j = run_json({"ovoid-search", "--format", "json"});
  CHECK(j["found"] == 168);
  for (const auto& o : j["ovoids"]) CHECK(o.size() == 5);
  const auto limited = run_json({"ovoid-search", "--q", "2", "--n", "4", "--max", "2", "--format", "json"});
  CHECK(limited["found"] == 2);
}

TEST_CASE("shortcut-check") {
  const auto r = run({"shortcut-check", "--n", "3", "--q", "2", "--all-w", "--all-ij", "--format", "json"});
  CHECK(r.code == kExitMismatch);
  const auto j = Json::parse(r.out);
  CHECK(j["pairs_checked"] == 74);
  CHECK(j["disagreements"] == 40);
  CHECK(run({"shortcut-check", "--n", "3", "--q", "2", "--w", "", "--i", "1", "--j", "2"}).code == kExitOk);
}

TEST_CASE("identical arguments give identical output") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "--n", "3", "--q", "3", "--all-w", "--all-ij", "--format", "json"},
           {"census", "--rank", "3", "--q", "2", "--format", "csv"},
           {"lattice-check", "--n", "4", "--q", "2", "--samples", "2000", "--seed", "9"},
           {"ovoid-search", "--max", "10"},
           {"cell", "--n", "4", "--q", "3", "--w", "2 1 3 2", "--format", "json"}}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
