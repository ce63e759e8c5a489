#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <tuple>
#include <unistd.h>

#include "copnum/gp_family.hpp"
#include "copnum/tables.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace copnum;
using namespace testing_support;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& tag)
      : path(std::filesystem::temp_directory_path() / ("copnum_" + tag + "_" + std::to_string(::getpid()) + ".csv")) {
    std::filesystem::remove(path);
  }
  ~TempFile() {
    std::filesystem::remove(path);
    std::filesystem::remove(path.string() + ".lock");
  }
  std::string str() const { return path.string(); }
};

TableRow row(int n, int k, int c, RowSource src = RowSource::computed) {
  TableRow r;
  r.n = n;
  r.k = k;
  r.relation = appendix_relation(n, k);
  if (min_k(n, k) != k) r.iso_min_k = min_k(n, k);
  r.girth = *girth(build_gp(GpParams::make(n, k)));
  r.cop_number = c;
  r.source = src;
  r.solve_ms = n * 10 + k;
  return r;
}

const std::vector<TableRow>& appendix30() {
  static const std::vector<TableRow> rows = [] {
    TableOptions o;
    o.record_timings = false;
    return reproduce_appendix(30, o);
  }();
  return rows;
}

}  // namespace

TEST_CASE("theory values") {
  CHECK(theory_cop_number(9, 1) == 2);
  CHECK(theory_cop_number(5, 2) == 3);
  CHECK(theory_cop_number(10, 3) == 3);
  CHECK_FALSE(theory_cop_number(9, 3).has_value());
  CHECK_FALSE(theory_cop_number(12, 3).has_value());
  CHECK(theory_cop_number(26, 10) == 4);
  CHECK_FALSE(theory_cop_number(18, 5).has_value());
  CHECK_FALSE(theory_cop_number(8, 2).has_value());  // girth 4 at k=2
}

TEST_CASE("csv round trip") {
  std::vector<TableRow> rows{row(5, 2, 3, RowSource::theory), row(9, 3, 3), row(17, 7, 3), row(26, 10, 4),
                             row(31, 13, 4, RowSource::theory)};
  rows[1].status = RowStatus::budget_exceeded;
  rows[1].cop_number = 0;
  const std::string text = render_csv(rows, "demo");
  CHECK(text.rfind("# copnum ", 0) == 0);
  CHECK(text.find("\n" + std::string(kCsvHeader) + "\n") != std::string::npos);
  CHECK(text.find("31,13,5n=12k-1,12,8,4,theory,323\n") != std::string::npos);
  CHECK(text.find("9,3,") != std::string::npos);
  CHECK(text.find(",budget-exceeded,") != std::string::npos);
  CHECK(parse_csv(text) == rows);
  CHECK(parse_csv(std::string(kCsvHeader) + "\n").empty());
  CHECK(parse_csv("").empty());
}

TEST_CASE("csv validation names the line") {
  const std::string h = std::string(kCsvHeader) + "\n";
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_csv(text);
    } catch (const CacheError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of(h + "5,2,k=2,,5,7,computed,0\n") == 2);
  CHECK(line_of("# c\n" + h + "5,2,k=2,,5,3,computed,0\n5,1,k=1,,4,2,oracle,0\n") == 4);
  CHECK(line_of(h + "5,3,,,5,3,computed,0\n") == 2);
  CHECK(line_of(h + "5,2,k=2,,5,3,computed\n") == 2);
  CHECK(line_of(h + "5,2,k=2,,9,3,computed,0\n") == 2);
  CHECK(line_of(h + "5,2,k=2,,5,x,computed,0\n") == 2);
  CHECK(line_of(h + "5,2,k=2,,5,3,budget-exceeded,0\n") == 2);
  CHECK(line_of("n,k,girth\n") == 1);
  CHECK_THROWS_WITH_AS(parse_csv(h + "5,2,k=2,,5,7,computed,0\n"), doctest::Contains("line 2"), CacheError);
}

TEST_CASE("cache store and load") {
  TempFile f("store");
  CHECK(cache_load(f.str()).empty());
  std::vector<TableRow> rows{row(5, 2, 3), row(6, 2, 2), row(7, 2, 3), row(8, 3, 3), row(9, 3, 3)};
  cache_store(f.str(), rows);
  CHECK(cache_load(f.str()) == rows);

  // Later stores merge and replace by (n,k).
  TableRow changed = row(7, 2, 3);
  changed.solve_ms = 999;
  cache_store(f.str(), {changed, row(10, 3, 3)});
  const auto merged = cache_load(f.str());
  CHECK(merged.size() == 6);
  CHECK(merged[2].solve_ms == 999);
  CHECK(merged.back().n == 10);

  std::ofstream(f.path) << std::string(kCsvHeader) << "\n";
  CHECK(cache_load(f.str()).empty());
  std::ofstream(f.path) << std::string(kCsvHeader) << "\n5,2,k=2,,5,7,computed,0\n";
  CHECK_THROWS_AS(cache_load(f.str()), CacheError);
}

TEST_CASE("cache hits skip the solver") {
  TempFile f("hits");
  TableRow fake = row(9, 3, 3);
  fake.solve_ms = 12345;
  cache_store(f.str(), {fake});
  TableOptions o;
  o.cache_path = f.str();
  const auto rows = reproduce_appendix(9, o);
  const auto it = std::find_if(rows.begin(), rows.end(), [](const TableRow& r) { return r.n == 9 && r.k == 3; });
  REQUIRE(it != rows.end());
  CHECK(it->cached);
  CHECK(it->solve_ms == 12345);
  // Fresh rows were written back.
  CHECK(cache_load(f.str()).size() == rows.size());

  // A cached value that contradicts theory aborts the run.
  TableRow wrong = row(5, 2, 2);
  cache_store(f.str(), {wrong});
  CHECK_THROWS_AS(reproduce_appendix(9, o), TheoryMismatch);
}

TEST_CASE("budget-exceeded rows are marked and the run continues") {
  TableOptions o;
  o.solver.memory_budget_bytes = 64 << 10;
  const auto rows = reproduce_appendix(12, o);
  int marked = 0;
  for (const auto& r : rows) marked += r.status == RowStatus::budget_exceeded;
  CHECK(marked > 0);
  CHECK(marked < static_cast<int>(rows.size()));
  CHECK(render_csv(rows, "t").find("budget-exceeded") != std::string::npos);
  CHECK(reproduce_table2(12, o).empty());
}

TEST_CASE("appendix spot rows") {
  const auto& rows = appendix30();
  CHECK(rows.size() == 208);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(std::pair(rows[i - 1].n, rows[i - 1].k) < std::pair(rows[i].n, rows[i].k));
  const auto find = [&](int n, int k) {
    return *std::find_if(rows.begin(), rows.end(), [&](const TableRow& r) { return r.n == n && r.k == k; });
  };
  const TableRow r145 = find(14, 5);
  CHECK(r145.iso_min_k == 3);
  CHECK(r145.girth == 6);
  CHECK(r145.cop_number == 3);
  CHECK(r145.relation == "n=3k-1");
  CHECK(find(5, 2).source == RowSource::theory);
  CHECK(find(18, 5).source == RowSource::computed);
  for (const auto& r : rows) {
    CHECK(r.status == RowStatus::ok);
    CHECK(r.solve_ms == 0);
    CHECK((r.cop_number >= 2 && r.cop_number <= 4));
  }

  const auto c31 = classify(GpParams::make(31, 13));
  CHECK(c31.min_k == 12);
  CHECK(c31.computed_girth == 8);
  CHECK(appendix_relation(31, 13) == "5n=12k-1");
  CHECK(theory_cop_number(31, 13) == 4);
}

TEST_CASE("table 2 prefixes") {
  TableOptions o;
  o.record_timings = false;
  std::set<std::tuple<int, int, int>> got;
  for (const auto& r : reproduce_table2(26, o)) got.insert({r.n, r.k, r.girth});
  CHECK(got == std::set<std::tuple<int, int, int>>{{25, 7, 8}, {26, 10, 8}});
  CHECK(reproduce_table2(24, o).empty());
}

TEST_CASE("untimed output is byte-identical across runs and thread counts") {
  TableOptions one;
  one.record_timings = false;
  one.threads = 1;
  TableOptions many = one;
  many.threads = 4;
  const std::string a = render_csv(reproduce_appendix(20, one), "appendix");
  const std::string b = render_csv(reproduce_appendix(20, many), "appendix");
  CHECK(a == b);
  CHECK(a == render_csv(reproduce_appendix(20, one), "appendix"));
}
