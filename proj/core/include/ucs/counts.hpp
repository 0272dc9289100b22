#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "ucs/bigint.hpp"
#include "ucs/enumerate.hpp"
#include "ucs/family.hpp"

namespace ucs {

struct CountsReport {
  int n = 0;
  std::uint64_t ucs_classes = 0;
  BigInt ucs_labeled = 0;
  std::uint64_t moore_classes = 0;
  BigInt moore_labeled = 0;
  std::uint64_t sparse_classes = 0;

  friend bool operator==(const CountsReport&, const CountsReport&) = default;
};

struct MooreCounts {
  std::uint64_t classes = 0;
  BigInt labeled = 0;
};

/// Moore families on {1..n} from union-closed counts for universes 0..n.
/// Index 0 must hold 1 (the family {empty set} on the empty universe).
/// Throws std::invalid_argument on mismatched or empty inputs.
MooreCounts moore_from_ucs(std::span<const std::uint64_t> ucs_classes, std::span<const BigInt> ucs_labeled);

BigInt binomial(int n, int k);

/// {universe \ A : A in f}, the empty set included, in subset order.
std::vector<SubsetMask> complement_family(const Family& f);
std::vector<SubsetMask> complement_masks(std::span<const SubsetMask> masks, int n);

bool intersection_closed(std::span<const SubsetMask> masks);

/// Canonical families with average member size at most n/2.
std::uint64_t sparse_count(int n, std::span<const SplitSpec> splits = {});

/// Enumerates universes 1..n. With splits, the universe-n columns cover only
/// that shard; the residue-0 shard also carries the smaller universes' share
/// of the Moore columns, so summing the rows of all shards gives the totals.
CountsReport compute_report(int n, std::span<const SplitSpec> splits = {});

/// Column-wise sum of reports for the same n (e.g. shards).
CountsReport merge_reports(std::span<const CountsReport> shards);

enum class ReportFormat { text, tsv };

/// Throws std::invalid_argument for anything other than "text" or "tsv".
ReportFormat parse_report_format(std::string_view name);

/// Header line followed by one row per report.
void emit_report(std::span<const CountsReport> reports, ReportFormat format, std::ostream& out);

/// Reads rows written by emit_report in tsv form; the header is optional.
std::vector<CountsReport> parse_tsv_report(std::istream& in);

}  // namespace ucs
