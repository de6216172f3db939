#pragma once

#include <cstddef>
#include <vector>

namespace halospan {

// Character offsets throughout this project count Unicode scalar values of
// the text they index into -- never bytes, never grapheme clusters. Spans
// are half-open: [start, end).

struct HardSpan {
    std::size_t start = 0;
    std::size_t end = 0;

    bool operator==(const HardSpan&) const = default;
    auto operator<=>(const HardSpan&) const = default;

    std::size_t length() const { return end - start; }
};

struct SoftSpan {
    std::size_t start = 0;
    std::size_t end = 0;
    double prob = 0.0;

    bool operator==(const SoftSpan&) const = default;
};

/// Canonical union: sorts, merges overlapping and adjacent ranges, drops
/// empty ones. The result is disjoint, sorted, and non-adjacent.
std::vector<HardSpan> canonical_union(std::vector<HardSpan> spans);

/// Total number of characters covered by a canonical span list.
std::size_t covered_chars(const std::vector<HardSpan>& spans);

/// Hard labels from soft labels: maximal merged runs of characters covered
/// by at least one span with prob strictly greater than 0.5.
std::vector<HardSpan> derive_hard_labels(const std::vector<SoftSpan>& soft);

}  // namespace halospan
