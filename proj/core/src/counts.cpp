#include "ucs/counts.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ucs {

namespace {

constexpr std::array<const char*, 6> kColumns = {"n",           "ucs_classes",    "ucs_labeled",
                                                 "moore_classes", "moore_labeled", "sparse_classes"};

std::uint64_t parse_u64(const std::string& s) {
  std::size_t used = 0;
  const auto v = std::stoull(s, &used);
  if (used != s.size()) throw std::invalid_argument("not a decimal integer: " + s);
  return v;
}

}  // namespace

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

MooreCounts moore_from_ucs(std::span<const std::uint64_t> ucs_classes, std::span<const BigInt> ucs_labeled) {
  if (ucs_classes.empty() || ucs_classes.size() != ucs_labeled.size()) {
    throw std::invalid_argument("class and labeled counts must cover the same universes 0..n");
  }
  if (ucs_classes[0] != 1 || ucs_labeled[0] != 1) throw std::invalid_argument("universe 0 has exactly one family");
  const int n = static_cast<int>(ucs_classes.size()) - 1;
  MooreCounts out;
  for (int i = 0; i <= n; ++i) {
    out.classes += ucs_classes[i];
    out.labeled += binomial(n, i) * ucs_labeled[i];
  }
  return out;
}

std::vector<SubsetMask> complement_masks(std::span<const SubsetMask> masks, int n) {
  std::vector<SubsetMask> out;
  out.reserve(masks.size());
  for (SubsetMask m : masks) out.push_back(full_mask(n) & ~m);
  std::sort(out.begin(), out.end(), order_less);
  return out;
}

std::vector<SubsetMask> complement_family(const Family& f) {
  std::vector<SubsetMask> masks(f.members().begin(), f.members().end());
  masks.push_back(0);
  return complement_masks(masks, f.universe_size());
}

bool intersection_closed(std::span<const SubsetMask> masks) {
  for (SubsetMask a : masks) {
    for (SubsetMask b : masks) {
      if (std::find(masks.begin(), masks.end(), a & b) == masks.end()) return false;
    }
  }
  return true;
}

std::uint64_t sparse_count(int n, std::span<const SplitSpec> splits) {
  std::uint64_t count = 0;
  enumerate(
      n, [&](const Family& f, std::uint64_t) { count += sparseness(f).is_sparse; }, splits);
  return count;
}

CountsReport compute_report(int n, std::span<const SplitSpec> splits) {
  const bool carries_smaller_universes =
      std::all_of(splits.begin(), splits.end(), [](const SplitSpec& s) { return s.residue == 0; });

  CountsReport r;
  r.n = n;
  if (carries_smaller_universes) {
    r.moore_classes = 1;
    r.moore_labeled = 1;
    for (int i = 1; i < n; ++i) {
      const ClassCounts c = count_with_automorphisms(i);
      r.moore_classes += c.classes;
      r.moore_labeled += binomial(n, i) * c.labeled;
    }
  }

  const std::uint64_t order = universe(n).permutations().size();
  UInt128 shard_labeled = 0;
  r.ucs_classes = enumerate(
      n,
      [&](const Family& f, std::uint64_t aut) {
        shard_labeled += order / aut;
        r.sparse_classes += sparseness(f).is_sparse;
      },
      splits);
  r.ucs_labeled = to_bigint(shard_labeled);
  r.moore_classes += r.ucs_classes;
  r.moore_labeled += r.ucs_labeled;
  return r;
}

CountsReport merge_reports(std::span<const CountsReport> shards) {
  if (shards.empty()) throw std::invalid_argument("nothing to merge");
  CountsReport total;
  total.n = shards.front().n;
  for (const CountsReport& s : shards) {
    if (s.n != total.n) throw std::invalid_argument("cannot merge reports for different n");
    total.ucs_classes += s.ucs_classes;
    total.ucs_labeled += s.ucs_labeled;
    total.moore_classes += s.moore_classes;
    total.moore_labeled += s.moore_labeled;
    total.sparse_classes += s.sparse_classes;
  }
  return total;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::text;
  if (name == "tsv") return ReportFormat::tsv;
  throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

void emit_report(std::span<const CountsReport> reports, ReportFormat format, std::ostream& out) {
  std::vector<std::array<std::string, 6>> rows;
  rows.push_back({kColumns[0], kColumns[1], kColumns[2], kColumns[3], kColumns[4], kColumns[5]});
  for (const CountsReport& r : reports) {
    rows.push_back({std::to_string(r.n), std::to_string(r.ucs_classes), r.ucs_labeled.str(),
                    std::to_string(r.moore_classes), r.moore_labeled.str(), std::to_string(r.sparse_classes)});
  }
  if (format == ReportFormat::tsv) {
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "\t" : "") << row[c];
      out << '\n';
    }
    return;
  }
  std::array<std::size_t, 6> width{};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
}

std::vector<CountsReport> parse_tsv_report(std::istream& in) {
  std::vector<CountsReport> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.rfind("n\t", 0) == 0) continue;
    std::vector<std::string> cells;
    std::istringstream fields(line);
    for (std::string cell; std::getline(fields, cell, '\t');) cells.push_back(cell);
    if (cells.size() != kColumns.size()) throw std::invalid_argument("expected 6 columns: " + line);
    try {
      CountsReport r;
      r.n = static_cast<int>(parse_u64(cells[0]));
      r.ucs_classes = parse_u64(cells[1]);
      r.ucs_labeled = BigInt(cells[2]);
      r.moore_classes = parse_u64(cells[3]);
      r.moore_labeled = BigInt(cells[4]);
      r.sparse_classes = parse_u64(cells[5]);
      out.push_back(std::move(r));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed report row: " + line);
    }
  }
  return out;
}

}  // namespace ucs
