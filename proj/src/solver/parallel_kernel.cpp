// Value iteration on per-class robber bitsets. One pass of the outer loop
// extends the cop-side winning sets by one cop ply and the robber-side sets by
// one robber ply, so first-set iteration numbers are exact capture times.

#include <algorithm>
#include <array>
#include <bit>

#include <omp.h>

#include "copnum/solver.hpp"

namespace copnum::detail {

namespace {

constexpr unsigned kStepBits = 6;
constexpr std::uint32_t kStepMask = (1U << kStepBits) - 1;

struct Layout {
  std::size_t bits_per_word;
  std::size_t words;
  std::uint64_t mask;

  explicit Layout(std::size_t vertices, std::size_t block_len)
      : bits_per_word(block_len > 1 ? block_len : 64),
        words((vertices + bits_per_word - 1) / bits_per_word),
        mask(bits_per_word == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits_per_word) - 1) {}

  std::size_t word(Vertex v) const { return v / bits_per_word; }
  std::uint64_t bit(Vertex v) const { return std::uint64_t{1} << (v % bits_per_word); }

  std::uint64_t rotate(std::uint64_t x, std::size_t steps) const {
    if (steps == 0) return x;
    return ((x << steps) | (x >> (bits_per_word - steps))) & mask;
  }
};

// Deduplicated (class, steps) successors of every class representative, CSR form.
struct Successors {
  std::vector<std::uint64_t> offsets;
  std::vector<std::uint32_t> packed;
};

Successors build_successors(const Graph& g, const CopIndex& index) {
  const std::uint64_t classes = index.class_count();
  const int k = index.cop_count();
  std::size_t bound = 1;
  for (int i = 0; i < k; ++i) bound *= g.max_degree() + 1;

  std::vector<std::uint32_t> slots(classes * bound);
  std::vector<std::uint32_t> counts(classes);

#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(classes); ++ci) {
    const auto c = static_cast<std::uint64_t>(ci);
    auto rep = index.representative(c);
    std::array<std::span<const Vertex>, kMaxCopsHardLimit> nbrs{};
    std::array<std::size_t, kMaxCopsHardLimit> digit{};
    std::array<Vertex, kMaxCopsHardLimit> cur{};
    for (int i = 0; i < k; ++i) nbrs[i] = g.neighbors(rep[i]);
    std::uint32_t* out = slots.data() + c * bound;
    std::size_t produced = 0;
    while (true) {
      // digit 0 means stay put, digit j means the (j-1)-th neighbor.
      for (int i = 0; i < k; ++i) cur[i] = digit[i] == 0 ? rep[i] : nbrs[i][digit[i] - 1];
      std::sort(cur.begin(), cur.begin() + k);
      auto loc = index.locate(std::span<const Vertex>(cur.data(), k));
      out[produced++] = (loc.cls << kStepBits) | loc.steps;
      int i = 0;
      for (; i < k; ++i) {
        if (++digit[i] <= nbrs[i].size()) break;
        digit[i] = 0;
      }
      if (i == k) break;
    }
    std::sort(out, out + produced);
    counts[c] = static_cast<std::uint32_t>(std::unique(out, out + produced) - out);
  }

  Successors s;
  s.offsets.resize(classes + 1, 0);
  for (std::uint64_t c = 0; c < classes; ++c) s.offsets[c + 1] = s.offsets[c] + counts[c];
  s.packed.resize(s.offsets[classes]);
  for (std::uint64_t c = 0; c < classes; ++c) {
    std::copy_n(slots.data() + c * bound, counts[c], s.packed.data() + s.offsets[c]);
  }
  return s;
}

}  // namespace

void run_parallel_kernel(const Graph& g, const CopIndex& index, PlyTables& tables) {
  const std::size_t nv = g.vertex_count();
  const std::uint64_t classes = index.class_count();
  if (classes >= (std::uint64_t{1} << (32 - kStepBits))) {
    throw SolverError("too many cop classes for the packed successor table");
  }
  if (index.rotation().order() > kStepMask + 1) throw SolverError("rotation order too large");

  const Layout layout(nv, index.rotation().order());
  const std::size_t words = layout.words;
  const Successors succ = build_successors(g, index);

  tables.cop_side.assign(classes * nv, kNoCapture);
  tables.robber_side.assign(classes * nv, kNoCapture);
  std::vector<std::uint64_t> cop_win(classes * words, 0);
  std::vector<std::uint64_t> robber_win(classes * words, 0);
  std::vector<std::uint64_t> full(words, 0);
  for (Vertex v = 0; v < nv; ++v) full[layout.word(v)] |= layout.bit(v);

  for (std::uint64_t c = 0; c < classes; ++c) {
    for (Vertex v : index.representative(c)) {
      cop_win[c * words + layout.word(v)] |= layout.bit(v);
      robber_win[c * words + layout.word(v)] |= layout.bit(v);
      tables.cop_side[c * nv + v] = 0;
      tables.robber_side[c * nv + v] = 0;
    }
  }

  std::vector<char> grew(classes, 0);
  for (int t = 0;; ++t) {
    if (2 * t + 2 >= kNoCapture) throw SolverError("capture time overflows the ply table");
    const auto cop_ply = static_cast<std::uint16_t>(2 * t + 1);
    const auto robber_ply = static_cast<std::uint16_t>(2 * t + 2);
    bool changed = false;

#pragma omp parallel
    {
      std::vector<std::uint64_t> acc(words);

#pragma omp for schedule(dynamic, 256) reduction(|| : changed)
      for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(classes); ++ci) {
        const auto c = static_cast<std::uint64_t>(ci);
        std::uint64_t* mine = cop_win.data() + c * words;
        grew[c] = 0;
        if (std::equal(mine, mine + words, full.begin())) continue;
        std::copy_n(mine, words, acc.begin());
        for (std::uint64_t e = succ.offsets[c]; e < succ.offsets[c + 1]; ++e) {
          const std::uint32_t packed = succ.packed[e];
          const std::uint64_t* theirs = robber_win.data() + std::uint64_t{packed >> kStepBits} * words;
          const std::size_t steps = packed & kStepMask;
          for (std::size_t w = 0; w < words; ++w) acc[w] |= layout.rotate(theirs[w], steps);
        }
        for (std::size_t w = 0; w < words; ++w) {
          std::uint64_t fresh = acc[w] & ~mine[w];
          if (fresh == 0) continue;
          grew[c] = 1;
          mine[w] = acc[w];
          while (fresh != 0) {
            const auto b = static_cast<std::size_t>(std::countr_zero(fresh));
            fresh &= fresh - 1;
            tables.cop_side[c * nv + w * layout.bits_per_word + b] = cop_ply;
          }
        }
        changed = changed || grew[c];
      }

#pragma omp for schedule(dynamic, 256) reduction(|| : changed)
      for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(classes); ++ci) {
        const auto c = static_cast<std::uint64_t>(ci);
        if (!grew[c]) continue;
        const std::uint64_t* cw = cop_win.data() + c * words;
        std::uint64_t* rw = robber_win.data() + c * words;
        auto in_cop_win = [&](Vertex v) { return (cw[layout.word(v)] & layout.bit(v)) != 0; };
        for (Vertex r = 0; r < nv; ++r) {
          if ((rw[layout.word(r)] & layout.bit(r)) != 0 || !in_cop_win(r)) continue;
          auto nb = g.neighbors(r);
          if (!std::all_of(nb.begin(), nb.end(), in_cop_win)) continue;
          rw[layout.word(r)] |= layout.bit(r);
          tables.robber_side[c * nv + r] = robber_ply;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
}

}  // namespace copnum::detail
