#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "linksplit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = linksplit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "linksplit_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path.string();
}

// Links up to 7 crossings from the fixture table.
std::string small_table() {
  std::string text;
  for (const auto& e : fixtures())
    if (parse_pd(e.pd).num_crossings() <= 7) text += e.name + "\t" + e.pd + "\n";
  return write_file("small.tsv", text);
}

}  // namespace

TEST_CASE("kh") {
  const auto r = run({"kh", "--field", "q", "--name", "trefoil", LINKSPLIT_FIXTURES});
  CHECK(r.code == 0);
  CHECK(r.out == "q^{1} + q^{3} + t^{2}q^{5} + t^{3}q^{9}\n");
  const auto pd = write_file("trefoil.pd", "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)\n");
  const auto f = run({"kh", "--field", "f2", "--format", "json", pd});
  CHECK(f.code == 0);
  CHECK(f.out.find("\"rank\":6") != std::string::npos);
}

TEST_CASE("ss on the Hopf link with auto weights over F2") {
  const auto r = run({"ss", "--field", "f2", "--name", "hopf", "--oracle", LINKSPLIT_FIXTURES});
  CHECK(r.code == 0);
  CHECK(r.out.find("b = 0") != std::string::npos);
  const auto j = run({"ss", "--field", "f2", "--name", "2n13_8862", "--format", "json", LINKSPLIT_FIXTURES});
  REQUIRE(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["b"] == 2);
  const auto d = fixture("2n13_8862");
  const auto s = pages_by_cancellation(build(d, default_weights<F2>(2)));
  REQUIRE(parsed["pages"].size() == s.pages.size());
  for (std::size_t k = 0; k < s.pages.size(); ++k)
    CHECK(page_from_json(parsed["pages"][k].dump(), 2) == s.pages[k]);
}

TEST_CASE("too few field elements for distinct weights") {
  const auto r = run({"ss", "--field", "f2", "--name", "borromean", LINKSPLIT_FIXTURES});
  CHECK(r.code == 2);
  CHECK(r.err.find("field too small for distinct weights") != std::string::npos);
  CHECK(run({"ss", "--field", "f2", "--weights", "0,1,1", "--name", "borromean", LINKSPLIT_FIXTURES}).code == 0);
  CHECK(run({"ss", "--field", "gf2k:2", "--name", "borromean", LINKSPLIT_FIXTURES}).code == 0);
}

TEST_CASE("bounds") {
  const auto r = run({"bounds", "--field", "f2", "--name", "2n13_8862", "--format", "json", LINKSPLIT_FIXTURES});
  CHECK(r.code == 0);
  const auto rep = report_from_json(r.out);
  CHECK(rep.b == 2);
  CHECK(rep.sp_min == 3);
  CHECK(rep.sp_max == 3);
  const auto t = run({"bounds", "--field", "f2", "--name", "whitehead", LINKSPLIT_FIXTURES});
  CHECK(t.out.find("sp = 2") != std::string::npos);
}

TEST_CASE("check") {
  const auto r = run({"check", "--field", "q", "--name", "borromean", LINKSPLIT_FIXTURES});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("d^2 = 0") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate", "x"}).code == 2);
  CHECK(run({"kh", "--format", "xml", LINKSPLIT_FIXTURES}).code == 2);
  CHECK(run({"kh", "--field", "gf2k:5", "--name", "hopf", LINKSPLIT_FIXTURES}).code == 2);
  CHECK(run({"ss", "--weights", "0", "--name", "hopf", LINKSPLIT_FIXTURES}).code == 2);
  CHECK(run({"kh", LINKSPLIT_FIXTURES}).code == 2);
  CHECK(run({"kh", "--name", "no_such_link", LINKSPLIT_FIXTURES}).code == 2);
  CHECK(run({"kh", write_file("bad.pd", "X(1,2,3)")}).code == 3);
  CHECK(run({"kh", write_file("bad2.pd", "X(1,2,3,4)")}).code == 3);
  CHECK(run({"kh", (scratch_dir() / "missing.pd").string()}).code == 3);
  CHECK(run({"kh", "--help"}).code == 0);
}

TEST_CASE("batch output is deterministic across thread counts") {
  const auto table = small_table();
  const auto a = run({"batch", "--field", "gf2k:2", "--threads", "1", table});
  const auto b = run({"batch", "--field", "gf2k:2", "--threads", "4", table});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("name\tb_lk_prime\tb\tu\n", 0) == 0);
  CHECK(a.out.find("\nhopf\t1\t0\t1\n") != std::string::npos);
  CHECK(a.out.find("\nwhitehead\t2\t") != std::string::npos);
}

TEST_CASE("batch logs per-link failures and keeps going") {
  const auto table = write_file("mixed.tsv", "hopf\tX(1,3,2,4) X(3,1,4,2)\nbroken\tX(1,2,3)\nunknot\tO\n");
  const auto r = run({"batch", "--field", "f2", table});
  CHECK(r.code == 0);
  CHECK(r.out == "name\tb_lk_prime\tb\tu\nhopf\t1\t0\t1\nunknot\t0\t0\t0\n");
  CHECK(r.err.find("broken") != std::string::npos);
}

TEST_CASE("batch resumes from a results file") {
  const auto table = small_table();
  const auto results = (scratch_dir() / "results.tsv").string();
  std::filesystem::remove(results);
  const auto first = run({"batch", "--field", "gf2k:2", "--results", results, table});
  REQUIRE(first.code == 0);
  std::ifstream in(results);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines + 1 == static_cast<std::size_t>(std::count(first.out.begin(), first.out.end(), '\n')));
  const auto second = run({"batch", "--field", "gf2k:2", "--results", results, table});
  CHECK(second.out == first.out);
  std::ifstream again(results);
  std::size_t after = 0;
  for (std::string line; std::getline(again, line);) ++after;
  CHECK(after == lines);
  // A different field is keyed separately.
  run({"batch", "--field", "q", "--results", results, write_file("one.tsv", "hopf\tX(1,3,2,4) X(3,1,4,2)\n")});
  std::ifstream third(results);
  std::size_t grown = 0;
  for (std::string line; std::getline(third, line);) ++grown;
  CHECK(grown == lines + 1);
}

TEST_CASE("batch JSON lines") {
  const auto r = run({"batch", "--field", "f2", "--format", "json", write_file("h.tsv", "hopf\tX(1,3,2,4) X(3,1,4,2)\n")});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["name"] == "hopf");
  CHECK(j["sp_min"] == 1);
}
