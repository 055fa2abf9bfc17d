#include "obhs/huffman.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "obhs/error.hpp"

namespace obhs {

FrequencyTable::FrequencyTable(std::vector<SymbolCount> entries, std::uint64_t total)
    : entries_(std::move(entries)), total_(total) {
  if (entries_.empty()) fail(ErrorKind::kInvalidInput, "frequency table is empty");
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].count == 0) fail(ErrorKind::kInvalidInput, "frequency table has a zero count");
    if (i > 0 && entries_[i - 1].symbol >= entries_[i].symbol) {
      fail(ErrorKind::kInvalidInput, "frequency table symbols are not strictly increasing");
    }
    sum += entries_[i].count;
  }
  if (sum != total_) fail(ErrorKind::kInvalidInput, "frequency counts do not sum to the total");
}

CodeLengthTable::CodeLengthTable(std::vector<SymbolLength> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) fail(ErrorKind::kInvalidInput, "code length table is empty");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const unsigned len = entries_[i].length;
    if (len < 1 || len > kMaxCodeLength) {
      fail(ErrorKind::kInvalidInput, "code length " + std::to_string(len) + " out of range");
    }
    if (i > 0 && entries_[i - 1].symbol >= entries_[i].symbol) {
      fail(ErrorKind::kInvalidInput, "code length symbols are not strictly increasing");
    }
  }
}

std::uint8_t CodeLengthTable::max_length() const noexcept {
  std::uint8_t best = 0;
  for (const auto& e : entries_) best = std::max(best, e.length);
  return best;
}

CodeLengthTable CanonicalCodebook::lengths() const {
  std::vector<SymbolLength> out;
  out.reserve(entries_.size());
  for (const auto& c : entries_) out.push_back({c.symbol, c.length});
  std::sort(out.begin(), out.end(),
            [](const SymbolLength& a, const SymbolLength& b) { return a.symbol < b.symbol; });
  return CodeLengthTable(std::move(out));
}

FrequencyTable compute_frequencies(std::span<const Symbol> block) {
  if (block.empty()) fail(ErrorKind::kInvalidInput, "cannot analyse an empty block");
  if (block.size() > kMaxBlockSamples) {
    fail(ErrorKind::kInvalidInput, "block longer than 65536 samples");
  }

  // Scratch histogram reused across calls; only touched slots are reset.
  thread_local std::vector<std::uint32_t> counts(kAlphabetSize, 0);
  std::vector<Symbol> distinct;
  for (Symbol s : block) {
    if (counts[s]++ == 0) distinct.push_back(s);
  }
  std::sort(distinct.begin(), distinct.end());

  std::vector<SymbolCount> entries;
  entries.reserve(distinct.size());
  for (Symbol s : distinct) {
    entries.push_back({s, counts[s]});
    counts[s] = 0;
  }
  return FrequencyTable(std::move(entries), block.size());
}

CodeLengthTable build_code_lengths(const FrequencyTable& freq) {
  const auto leaves = freq.entries();
  const std::size_t m = leaves.size();
  if (m == 1) return CodeLengthTable({{leaves[0].symbol, 1}});

  // Two-queue merge. Leaves are sorted by (weight, symbol); internal nodes
  // are created with non-decreasing weight and increasing rank, and every
  // internal rank (65536 + creation index) exceeds every leaf rank. Taking
  // the smaller front of the two queues, leaf on equal weight, therefore
  // pops nodes in exact (weight, rank) order.
  std::vector<std::uint32_t> order(m);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return leaves[a].count != leaves[b].count ? leaves[a].count < leaves[b].count
                                              : leaves[a].symbol < leaves[b].symbol;
  });

  // Nodes [0, m) are leaves in table order; internal node j is m + j, so a
  // parent always has a larger index than its children.
  std::vector<std::uint32_t> parent(2 * m - 1, 0);
  std::vector<std::uint64_t> internal_weight;
  internal_weight.reserve(m - 1);
  std::size_t next_leaf = 0;
  std::size_t next_internal = 0;

  auto pop = [&]() -> std::pair<std::uint64_t, std::uint32_t> {
    const bool leaf_left = next_leaf < m;
    const bool internal_left = next_internal < internal_weight.size();
    if (leaf_left && (!internal_left || leaves[order[next_leaf]].count <= internal_weight[next_internal])) {
      const std::uint32_t node = order[next_leaf++];
      return {leaves[node].count, node};
    }
    const auto node = static_cast<std::uint32_t>(m + next_internal);
    return {internal_weight[next_internal++], node};
  };

  for (std::size_t created = 0; created + 1 < m; ++created) {
    const auto [wa, a] = pop();
    const auto [wb, b] = pop();
    const auto node = static_cast<std::uint32_t>(m + created);
    parent[a] = node;
    parent[b] = node;
    internal_weight.push_back(wa + wb);
  }

  const auto root = static_cast<std::uint32_t>(2 * m - 2);
  std::vector<std::uint32_t> depth(2 * m - 1, 0);
  for (std::uint32_t n = root; n-- > 0;) depth[n] = depth[parent[n]] + 1;

  std::vector<SymbolLength> out;
  out.reserve(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    if (depth[i] > kMaxCodeLength) {
      fail(ErrorKind::kInternal, "Huffman depth " + std::to_string(depth[i]) + " exceeds 32");
    }
    out.push_back({leaves[i].symbol, static_cast<std::uint8_t>(depth[i])});
  }
  return CodeLengthTable(std::move(out));
}

bool kraft_complete(std::span<const SymbolLength> entries) noexcept {
  if (entries.empty()) return false;
  // Each length contributes 2^(32 - len) units of a 2^32 budget.
  std::uint64_t sum = 0;
  for (const auto& e : entries) {
    if (e.length < 1 || e.length > kMaxCodeLength) return false;
    sum += std::uint64_t{1} << (kMaxCodeLength - e.length);
    if (sum > (std::uint64_t{1} << kMaxCodeLength)) return false;
  }
  const std::uint64_t want = entries.size() == 1 ? std::uint64_t{1} << (kMaxCodeLength - 1)
                                                 : std::uint64_t{1} << kMaxCodeLength;
  return sum == want;
}

CanonicalCodebook assign_canonical_codes(const CodeLengthTable& lengths) {
  if (!kraft_complete(lengths.entries())) {
    fail(ErrorKind::kInternal, "code lengths violate the Kraft invariant");
  }
  std::vector<Codeword> words;
  words.reserve(lengths.size());
  for (const auto& e : lengths.entries()) words.push_back({e.symbol, e.length, 0});
  std::sort(words.begin(), words.end(), [](const Codeword& a, const Codeword& b) {
    return a.length != b.length ? a.length < b.length : a.symbol < b.symbol;
  });

  std::uint64_t code = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    words[i].code = static_cast<std::uint32_t>(code);
    if (i + 1 < words.size()) code = (code + 1) << (words[i + 1].length - words[i].length);
  }
  return CanonicalCodebook(std::move(words));
}

}  // namespace obhs
