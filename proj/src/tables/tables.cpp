#include <algorithm>
#include <chrono>
#include <map>

#include <omp.h>

#include "copnum/gp_family.hpp"
#include "copnum/tables.hpp"

namespace copnum {

bool TableRow::operator==(const TableRow& o) const {
  return n == o.n && k == o.k && relation == o.relation && iso_min_k == o.iso_min_k && girth == o.girth &&
         cop_number == o.cop_number && source == o.source && solve_ms == o.solve_ms && status == o.status;
}

std::optional<int> theory_cop_number(int n, int k) {
  const auto report = classify(GpParams::make(n, k));
  const int m = report.min_k;
  if (m == 1) return 2;
  if (m == 2 && report.computed_girth == 5) return 3;
  if (m == 3 && n != 9 && n != 12) return 3;
  if (report.cop4_guaranteed) return 4;
  return std::nullopt;
}

namespace {

TableRow solve_row(int n, int k, const TableOptions& options) {
  const GpParams p = GpParams::make(n, k);
  const Graph g = build_gp(p);
  TableRow row;
  row.n = n;
  row.k = k;
  row.relation = appendix_relation(n, k);
  if (const int m = min_k(n, k); m != k) row.iso_min_k = m;
  row.girth = girth(g).value_or(0);

  const auto start = std::chrono::steady_clock::now();
  try {
    row.cop_number = cop_number(g, 4, options.solver).value_or(0);
  } catch (const BudgetExceeded&) {
    row.status = RowStatus::budget_exceeded;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  if (options.record_timings) {
    row.solve_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }
  return row;
}

// Labels the source and returns a diagnostic when theory and solver disagree.
std::string reconcile(TableRow& row) {
  const auto expected = theory_cop_number(row.n, row.k);
  row.source = expected ? RowSource::theory : RowSource::computed;
  if (row.status != RowStatus::ok) return {};
  if (row.cop_number == 0) {
    return "GP(" + std::to_string(row.n) + "," + std::to_string(row.k) + "): four cops do not suffice";
  }
  if (expected && *expected != row.cop_number) {
    return "GP(" + std::to_string(row.n) + "," + std::to_string(row.k) + "): solver says " +
           std::to_string(row.cop_number) + ", theory says " + std::to_string(*expected);
  }
  return {};
}

}  // namespace

std::vector<TableRow> reproduce_appendix(int max_n, const TableOptions& options) {
  std::vector<std::pair<int, int>> params;
  for (int n = 5; n <= max_n; ++n) {
    for (int k = 1; 2 * k < n; ++k) params.emplace_back(n, k);
  }

  std::map<std::pair<int, int>, TableRow> cache;
  if (!options.cache_path.empty()) {
    for (TableRow& row : cache_load(options.cache_path)) {
      row.cached = true;
      cache[{row.n, row.k}] = row;
    }
  }

  std::vector<TableRow> rows(params.size());
  std::vector<char> fresh(params.size(), 0);
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
  // Largest n first so the long solves start early.
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::size_t j = 0; j < params.size(); ++j) {
    const std::size_t i = params.size() - 1 - j;
    const auto [n, k] = params[i];
    if (auto hit = cache.find({n, k}); hit != cache.end() && hit->second.status == RowStatus::ok) {
      rows[i] = hit->second;
      if (!options.record_timings) rows[i].solve_ms = 0;
      continue;
    }
    rows[i] = solve_row(n, k, options);
    fresh[i] = 1;
  }

  std::string problems;
  for (TableRow& row : rows) {
    const std::string issue = reconcile(row);
    if (!issue.empty()) problems += issue + "\n";
  }
  if (!problems.empty()) throw TheoryMismatch(problems);

  if (!options.cache_path.empty()) {
    std::vector<TableRow> computed;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (fresh[i] && rows[i].status == RowStatus::ok) computed.push_back(rows[i]);
    }
    if (!computed.empty()) cache_store(options.cache_path, computed);
  }
  return rows;
}

std::vector<TableRow> reproduce_table2(int max_n, const TableOptions& options) {
  std::vector<TableRow> out;
  for (TableRow& row : reproduce_appendix(max_n, options)) {
    if (row.status == RowStatus::ok && row.cop_number == 4) out.push_back(std::move(row));
  }
  return out;
}

}  // namespace copnum
