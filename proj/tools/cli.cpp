#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "ucs/family.hpp"

namespace ucs::cli {

namespace {

std::uint64_t parse_field(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("malformed split " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

void emit_reps(const RunConfig& config, std::ostream& out) {
  std::string buffer;
  buffer.reserve(1 << 16);
  enumerate(
      config.n,
      [&](const Family& f, std::uint64_t aut) {
        if (config.sparse_only && !sparseness(f).is_sparse) return;
        if (config.labeled) {
          buffer += std::to_string(aut);
          buffer += ' ';
        }
        buffer += config.moore ? format_masks(complement_family(f)) : to_string(f);
        buffer += '\n';
        if (buffer.size() > (1 << 15)) {
          out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
          buffer.clear();
        }
      },
      config.splits);
  out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
}

void merge(const RunConfig& config, std::ostream& out) {
  std::vector<CountsReport> rows;
  for (const std::string& path : config.inputs) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    auto parsed = parse_tsv_report(in);
    rows.insert(rows.end(), parsed.begin(), parsed.end());
  }
  std::vector<CountsReport> merged;
  for (int n = 1; n <= kMaxUniverse; ++n) {
    std::vector<CountsReport> same_n;
    for (const auto& r : rows) {
      if (r.n == n) same_n.push_back(r);
    }
    if (!same_n.empty()) merged.push_back(merge_reports(same_n));
  }
  emit_report(merged, config.format, out);
}

}  // namespace

Mode parse_mode(std::string_view name) {
  if (name == "count") return Mode::count;
  if (name == "emit-reps") return Mode::emit_reps;
  if (name == "report") return Mode::report;
  if (name == "merge") return Mode::merge;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

SplitSpec parse_split(std::string_view text) {
  SplitSpec s;
  const auto first = text.find('/');
  if (first == std::string_view::npos) throw std::invalid_argument("split must look like MOD/RES/DEPTH");
  const auto rest = text.substr(first + 1);
  const auto second = rest.find('/');
  s.modulus = parse_field(text.substr(0, first), "modulus");
  s.residue = parse_field(rest.substr(0, second), "residue");
  if (second != std::string_view::npos) {
    const auto depth = parse_field(rest.substr(second + 1), "depth");
    if (depth > static_cast<std::uint64_t>(kMaxSubsets)) throw std::invalid_argument("split depth too large");
    s.depth = static_cast<int>(depth);
  }
  if (s.modulus == 0) throw std::invalid_argument("split modulus must be positive");
  if (s.residue >= s.modulus) throw std::invalid_argument("split residue must be smaller than the modulus");
  if (s.depth < 1) throw std::invalid_argument("split depth must be at least 1");
  return s;
}

void validate(const RunConfig& config) {
  if (config.mode == Mode::merge) {
    if (config.inputs.empty()) throw std::invalid_argument("merge needs at least one input file");
    return;
  }
  if (config.n < 1 || config.n > kMaxUniverse) {
    throw std::invalid_argument("n must be in [1, 7], got " + std::to_string(config.n));
  }
  if (config.mode == Mode::report && !config.splits.empty()) {
    throw std::invalid_argument("report mode does not take --split");
  }
  int previous = 0;
  for (const SplitSpec& s : config.splits) {
    if (s.modulus == 0 || s.residue >= s.modulus) throw std::invalid_argument("split residue must be < modulus");
    if (s.depth <= previous) throw std::invalid_argument("split depths must be strictly increasing");
    previous = s.depth;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.output.empty()) {
      file.open(config.output, std::ios::binary | std::ios::trunc);
      if (!file) throw std::runtime_error("cannot write " + config.output);
      sink = &file;
    }
    switch (config.mode) {
      case Mode::count: {
        const CountsReport r = compute_report(config.n, config.splits);
        emit_report({&r, 1}, config.format, *sink);
        break;
      }
      case Mode::report: {
        std::vector<CountsReport> rows;
        for (int n = 1; n <= config.n; ++n) rows.push_back(compute_report(n));
        emit_report(rows, config.format, *sink);
        break;
      }
      case Mode::emit_reps:
        emit_reps(config, *sink);
        break;
      case Mode::merge:
        merge(config, *sink);
        break;
    }
    sink->flush();
    if (!*sink) throw std::runtime_error("write failed");
    return 0;
  } catch (const std::exception& e) {
    err << "ucsenum: " << e.what() << '\n';
    return 1;
  }
}

int main(int argc, char** argv) {
  CLI::App app{"Isomorph-free enumeration of union-closed sets and Moore families"};
  RunConfig config;
  std::string mode = "count";
  std::string format = "tsv";
  std::vector<std::string> splits;
  app.add_option("--n,-n", config.n, "Universe size (1-7)");
  app.add_option("--mode,-m", mode, "count | emit-reps | report | merge")->capture_default_str();
  app.add_flag("--labeled", config.labeled, "emit-reps: prefix each family with |Aut|");
  app.add_flag("--moore", config.moore, "emit-reps: print complementary Moore families");
  app.add_flag("--sparse-only", config.sparse_only, "emit-reps: only sparse families");
  app.add_option("--split", splits, "MOD/RES/DEPTH; repeat with increasing depth to re-split");
  app.add_option("--format", format, "text | tsv")->capture_default_str();
  app.add_option("--output,-o", config.output, "Output file (default: stdout)");
  app.add_option("--input", config.inputs, "merge: TSV files to sum");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    config.mode = parse_mode(mode);
    config.format = parse_report_format(format);
    for (const auto& s : splits) config.splits.push_back(parse_split(s));
  } catch (const std::exception& e) {
    std::cerr << "ucsenum: " << e.what() << '\n';
    return 2;
  }
  return run(config, std::cout, std::cerr);
}

}  // namespace ucs::cli
