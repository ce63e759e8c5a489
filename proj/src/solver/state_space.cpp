#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

#include "copnum/state_space.hpp"

namespace copnum {

MultisetRanker::MultisetRanker(std::size_t vertices, std::size_t size)
    : vertices_(vertices), size_(size) {
  if (vertices == 0) throw std::invalid_argument("multiset ranker needs at least one vertex");
  const std::size_t rows = vertices + size;
  table_.assign(rows * (size + 1), 0);
  for (std::size_t n = 0; n < rows; ++n) {
    table_[n * (size + 1)] = 1;
    for (std::size_t k = 1; k <= size && k <= n; ++k) {
      std::uint64_t a = table_[(n - 1) * (size + 1) + k - 1];
      std::uint64_t b = table_[(n - 1) * (size + 1) + k];
      if (a > std::numeric_limits<std::uint64_t>::max() - b) {
        throw std::overflow_error("multiset count overflows 64 bits");
      }
      table_[n * (size + 1) + k] = a + b;
    }
  }
  count_ = binom(vertices + size - 1, size);
}

void MultisetRanker::unrank(std::uint64_t r, std::span<Vertex> out) const {
  std::size_t upper = vertices_ + size_ - 1;
  for (std::size_t i = size_; i-- > 0;) {
    // Largest d < upper with C(d, i+1) <= r; C(i, i+1) == 0 bounds the scan.
    std::size_t d = upper - 1;
    while (binom(d, i + 1) > r) --d;
    r -= binom(d, i + 1);
    out[i] = static_cast<Vertex>(d - i);
    upper = d;
  }
}

bool is_automorphism(const Graph& g, const BlockRotation& rot) {
  const std::size_t n = g.vertex_count();
  if (rot.block_len == 0 || n % rot.block_len != 0) return false;
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(rot.apply(u, 1)) != g.degree(u)) return false;
    for (Vertex v : g.neighbors(u)) {
      if (!g.adjacent(rot.apply(u, 1), rot.apply(v, 1))) return false;
    }
  }
  return true;
}

BlockRotation detect_block_rotation(const Graph& g) {
  const std::size_t n = g.vertex_count();
  for (std::size_t len = std::min<std::size_t>(n, 64); len > 1; --len) {
    if (n % len != 0) continue;
    BlockRotation candidate{len};
    if (is_automorphism(g, candidate)) return candidate;
  }
  return {};
}

std::uint64_t CopIndex::estimate_bytes(std::uint64_t multisets, int cop_count, bool symmetric) {
  if (!symmetric) return 0;
  return multisets * (sizeof(std::uint32_t) + sizeof(std::uint8_t)) +
         multisets * cop_count * sizeof(Vertex);
}

CopIndex::CopIndex(const Graph& g, int cop_count, BlockRotation rotation)
    : cop_count_(cop_count),
      rotation_(rotation),
      ranker_(g.vertex_count(), static_cast<std::size_t>(cop_count)) {
  if (cop_count < 1 || cop_count > kMaxCopsHardLimit) {
    throw std::invalid_argument("cop count must lie in [1, " + std::to_string(kMaxCopsHardLimit) + "]");
  }
  if (rotation_.block_len > 64 || !is_automorphism(g, rotation_)) {
    throw std::invalid_argument("block rotation is not an automorphism of the graph");
  }
  const std::uint64_t total = ranker_.count();
  if (total > std::numeric_limits<std::uint32_t>::max() / 2) {
    throw std::length_error("too many cop multisets to index");
  }

  std::array<Vertex, kMaxCopsHardLimit> buf{};
  std::span<Vertex> cur(buf.data(), static_cast<std::size_t>(cop_count));

  if (rotation_.order() == 1) {
    class_count_ = total;
    reps_.resize(total * cop_count);
    for (std::uint64_t r = 0; r < total; ++r) {
      ranker_.unrank(r, cur);
      std::copy(cur.begin(), cur.end(), reps_.begin() + r * cop_count);
    }
    return;
  }

  constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();
  class_of_rank_.assign(total, kUnassigned);
  steps_of_rank_.assign(total, 0);
  std::array<Vertex, kMaxCopsHardLimit> rotated_buf{};
  std::span<Vertex> rotated(rotated_buf.data(), static_cast<std::size_t>(cop_count));

  for (std::uint64_t r = 0; r < total; ++r) {
    if (class_of_rank_[r] != kUnassigned) continue;
    ranker_.unrank(r, cur);
    const auto cls = static_cast<std::uint32_t>(class_count_++);
    reps_.insert(reps_.end(), cur.begin(), cur.end());
    for (std::size_t h = 0; h < rotation_.order(); ++h) {
      for (int i = 0; i < cop_count; ++i) rotated[i] = rotation_.apply(cur[i], h);
      std::sort(rotated.begin(), rotated.end());
      const std::uint64_t rr = ranker_.rank(rotated);
      if (class_of_rank_[rr] == kUnassigned) {
        class_of_rank_[rr] = cls;
        steps_of_rank_[rr] = static_cast<std::uint8_t>(h);
      }
    }
  }
}

}  // namespace copnum
