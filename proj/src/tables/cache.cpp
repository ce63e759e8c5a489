#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include "copnum/gp_family.hpp"
#include "copnum/tables.hpp"

#ifndef COPNUM_VERSION
#define COPNUM_VERSION "dev"
#endif

namespace copnum {

CacheError::CacheError(const std::string& what, std::size_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

constexpr std::string_view kBudgetSource = "budget-exceeded";

std::string_view source_name(const TableRow& row) {
  if (row.status == RowStatus::budget_exceeded) return kBudgetSource;
  return row.source == RowSource::theory ? "theory" : "computed";
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

template <typename T>
T number(std::string_view field, const char* name, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw CacheError(std::string("bad ") + name + " '" + std::string(field) + "'", line);
  }
  return value;
}

TableRow parse_row(std::string_view text, std::size_t line) {
  const auto f = split(text, ',');
  if (f.size() != 8) throw CacheError("expected 8 fields, found " + std::to_string(f.size()), line);
  TableRow row;
  row.n = number<int>(f[0], "n", line);
  row.k = number<int>(f[1], "k", line);
  if (!GpParams::valid(row.n, row.k)) throw CacheError("invalid parameters", line);
  row.relation = std::string(f[2]);
  if (!f[3].empty()) {
    row.iso_min_k = number<int>(f[3], "iso_min_k", line);
    if (*row.iso_min_k < 1 || *row.iso_min_k >= row.k) throw CacheError("iso_min_k out of range", line);
  }
  row.girth = number<int>(f[4], "girth", line);
  if (row.girth < 3 || row.girth > 8) throw CacheError("girth out of range", line);
  if (f[6] == kBudgetSource) {
    row.status = RowStatus::budget_exceeded;
    if (!f[5].empty()) throw CacheError("budget-exceeded row carries a cop number", line);
  } else {
    if (f[6] == "theory") {
      row.source = RowSource::theory;
    } else if (f[6] == "computed") {
      row.source = RowSource::computed;
    } else {
      throw CacheError("unknown source '" + std::string(f[6]) + "'", line);
    }
    row.cop_number = number<int>(f[5], "cop_number", line);
    if (row.cop_number < 2 || row.cop_number > 4) throw CacheError("cop number out of range", line);
  }
  row.solve_ms = number<std::int64_t>(f[7], "solve_ms", line);
  if (row.solve_ms < 0) throw CacheError("negative solve_ms", line);
  return row;
}

// Holds an flock on a sidecar file for the lifetime of the object.
class FileLock {
 public:
  FileLock(const std::string& path, int op) {
    fd_ = ::open((path + ".lock").c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ < 0) throw std::runtime_error("cannot open lock file for " + path);
    if (::flock(fd_, op) != 0) {
      ::close(fd_);
      throw std::runtime_error("cannot lock " + path);
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_;
};

std::vector<TableRow> read_unlocked(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {};
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

}  // namespace

std::string render_csv(const std::vector<TableRow>& rows, std::string_view title) {
  std::string out = "# copnum " COPNUM_VERSION " " + std::string(title) + "\n";
  out += kCsvHeader;
  out += '\n';
  for (const TableRow& r : rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.k) + "," + r.relation + ",";
    if (r.iso_min_k) out += std::to_string(*r.iso_min_k);
    out += "," + std::to_string(r.girth) + ",";
    if (r.status == RowStatus::ok) out += std::to_string(r.cop_number);
    out += "," + std::string(source_name(r)) + "," + std::to_string(r.solve_ms) + "\n";
  }
  return out;
}

std::vector<TableRow> parse_csv(std::string_view text) {
  std::vector<TableRow> rows;
  bool header_seen = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kCsvHeader) throw CacheError("expected header '" + std::string(kCsvHeader) + "'", line_no);
      header_seen = true;
      continue;
    }
    rows.push_back(parse_row(line, line_no));
  }
  return rows;
}

std::vector<TableRow> cache_load(const std::string& path) {
  FileLock lock(path, LOCK_SH);
  return read_unlocked(path);
}

void cache_store(const std::string& path, const std::vector<TableRow>& rows) {
  FileLock lock(path, LOCK_EX);
  std::map<std::pair<int, int>, TableRow> merged;
  for (TableRow& r : read_unlocked(path)) merged[{r.n, r.k}] = std::move(r);
  for (const TableRow& r : rows) merged[{r.n, r.k}] = r;
  std::vector<TableRow> all;
  for (auto& [key, row] : merged) all.push_back(std::move(row));

  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << render_csv(all, "cache");
    if (!out) throw std::runtime_error("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace copnum
