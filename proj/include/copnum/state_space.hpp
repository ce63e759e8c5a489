#pragma once

// Dense indexing of cop multisets, optionally quotiented by a rotation automorphism.

#include <cstdint>
#include <span>
#include <vector>

#include "copnum/graph.hpp"

namespace copnum {

inline constexpr int kMaxCopsHardLimit = 8;

// Colex ranking of size-`size` multisets over {0..vertices-1}.
class MultisetRanker {
 public:
  MultisetRanker(std::size_t vertices, std::size_t size);

  std::uint64_t count() const { return count_; }
  std::size_t size() const { return size_; }
  std::size_t vertices() const { return vertices_; }

  // `sorted` must be nondecreasing.
  std::uint64_t rank(std::span<const Vertex> sorted) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < size_; ++i) r += binom(sorted[i] + i, i + 1);
    return r;
  }
  void unrank(std::uint64_t r, std::span<Vertex> out) const;

 private:
  std::uint64_t binom(std::size_t n, std::size_t k) const { return table_[n * (size_ + 1) + k]; }

  std::size_t vertices_;
  std::size_t size_;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> table_;
};

// The automorphism that advances every vertex one step inside its block of
// `block_len` consecutive labels: v = b*L + p  ->  b*L + (p+1) mod L.
// block_len == 1 is the trivial group. GP(n,k) admits block_len == n.
struct BlockRotation {
  std::size_t block_len = 1;

  std::size_t order() const { return block_len; }
  Vertex apply(Vertex v, std::size_t steps) const {
    if (block_len == 1) return v;
    const std::size_t base = v - v % block_len;
    return static_cast<Vertex>(base + (v % block_len + steps) % block_len);
  }
  Vertex inverse(Vertex v, std::size_t steps) const {
    return apply(v, (block_len - steps % block_len) % block_len);
  }
};

bool is_automorphism(const Graph& g, const BlockRotation& rot);

// Largest block length (at most 64, dividing the vertex count) that is an automorphism.
BlockRotation detect_block_rotation(const Graph& g);

// Cop multisets grouped into rotation classes. Every multiset equals
// rotation^steps(representative(class)).
class CopIndex {
 public:
  struct Location {
    std::uint32_t cls;
    std::uint32_t steps;
  };

  CopIndex(const Graph& g, int cop_count, BlockRotation rotation);

  int cop_count() const { return cop_count_; }
  std::uint64_t multiset_count() const { return ranker_.count(); }
  std::uint64_t class_count() const { return class_count_; }
  const BlockRotation& rotation() const { return rotation_; }
  const MultisetRanker& ranker() const { return ranker_; }

  std::span<const Vertex> representative(std::uint64_t cls) const {
    return {reps_.data() + cls * cop_count_, static_cast<std::size_t>(cop_count_)};
  }

  Location locate(std::span<const Vertex> sorted_cops) const {
    const std::uint64_t r = ranker_.rank(sorted_cops);
    if (class_of_rank_.empty()) return {static_cast<std::uint32_t>(r), 0};
    return {class_of_rank_[r], steps_of_rank_[r]};
  }

  // Bytes the index itself needs for the given shape.
  static std::uint64_t estimate_bytes(std::uint64_t multisets, int cop_count, bool symmetric);

 private:
  int cop_count_;
  BlockRotation rotation_;
  MultisetRanker ranker_;
  std::uint64_t class_count_ = 0;
  std::vector<Vertex> reps_;
  std::vector<std::uint32_t> class_of_rank_;
  std::vector<std::uint8_t> steps_of_rank_;
};

}  // namespace copnum
