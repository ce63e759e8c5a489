#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "copnum/solver.hpp"

namespace copnum {

// Whether a row's cop number is also fixed by a closed-form rule for its family.
enum class RowSource { theory, computed };
enum class RowStatus { ok, budget_exceeded };

struct TableRow {
  int n = 0;
  int k = 0;
  std::string relation;
  std::optional<int> iso_min_k;
  int girth = 0;
  int cop_number = 0;
  RowSource source = RowSource::computed;
  std::int64_t solve_ms = 0;
  RowStatus status = RowStatus::ok;
  // Set when the row came from the cache; not serialized.
  bool cached = false;

  // Compares the serialized fields.
  bool operator==(const TableRow& o) const;
};

class TheoryMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CacheError : public std::runtime_error {
 public:
  CacheError(const std::string& what, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct TableOptions {
  // 0 keeps the OpenMP default.
  int threads = 0;
  // When false every solve_ms is written as 0 so reruns are byte-identical.
  bool record_timings = true;
  // Empty disables caching.
  std::string cache_path;
  SolverConfig solver;
};

// Cop number of GP(n,k) where a closed-form family rule fixes it.
std::optional<int> theory_cop_number(int n, int k);

// One row per valid (n,k) with 5 <= n <= max_n, sorted. Throws TheoryMismatch
// when a solved value contradicts theory_cop_number.
std::vector<TableRow> reproduce_appendix(int max_n, const TableOptions& options = {});

// The rows of reproduce_appendix with cop number 4.
std::vector<TableRow> reproduce_table2(int max_n, const TableOptions& options = {});

inline constexpr std::string_view kCsvHeader = "n,k,relation,iso_min_k,girth,cop_number,source,solve_ms";

std::string render_csv(const std::vector<TableRow>& rows, std::string_view title);
// Throws CacheError naming the offending line.
std::vector<TableRow> parse_csv(std::string_view text);

// Merge rows into the cache file under an exclusive lock; rows already there are replaced.
void cache_store(const std::string& path, const std::vector<TableRow>& rows);
// Missing file loads as empty.
std::vector<TableRow> cache_load(const std::string& path);

}  // namespace copnum
