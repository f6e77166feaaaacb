// Command-line front end: compute / witness / verify / sweep / bench.
//
// Exit codes: 0 success or valid assignment, 1 invalid assignment,
// 2 usage or spec error, 3 cross-validation mismatch.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "multidom/formulas.hpp"
#include "multidom/model.hpp"
#include "multidom/oracle.hpp"
#include "multidom/sweep.hpp"
#include "multidom/witness.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;
constexpr int kMismatch = 3;

struct GlobalOptions {
  std::string format = "text";
  multidom::SearchBudget budget;
};

std::string trimmed(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::int64_t parse_int(const std::string& text, const char* what) {
  const std::string t = trimmed(text);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw multidom::SpecError(std::string("cannot parse ") + what + ": '" + text + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.push_back("");
  return out;
}

multidom::PartitionSpec parse_parts(const std::string& text) {
  multidom::PartitionSpec spec;
  for (const std::string& item : split(text, ',')) {
    const std::int64_t size = parse_int(item, "part size");
    if (size < 1) {
      throw multidom::SpecError("part sizes must be positive: '" + item + "'");
    }
    spec.sizes.push_back(size);
  }
  if (spec.sizes.empty()) throw multidom::SpecError("--parts must list at least one part size");
  multidom::validate(spec);
  return spec;
}

multidom::Variant parse_variant_or_throw(const std::string& token) {
  multidom::Variant v;
  if (!multidom::parse_variant(token, v)) {
    throw multidom::SpecError("unknown variant '" + token + "'");
  }
  return v;
}

std::vector<multidom::Variant> parse_variant_list(const std::string& text) {
  const std::vector<multidom::Variant> all = {
      multidom::Variant::Signed, multidom::Variant::SignedTotal, multidom::Variant::Minus};
  if (text == "all") return all;
  std::vector<bool> wanted(3, false);
  for (const std::string& item : split(text, ',')) {
    wanted[static_cast<int>(parse_variant_or_throw(trimmed(item)))] = true;
  }
  std::vector<multidom::Variant> out;
  for (multidom::Variant v : all) {
    if (wanted[static_cast<int>(v)]) out.push_back(v);
  }
  return out;
}

std::string join_sizes(const multidom::PartitionSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spec.sizes[i]);
  }
  return out;
}

std::string join_values(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i] > 0 ? "+1" : values[i] == 0 ? "0" : "-1";
  }
  return out;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------
// sweep-row rendering

constexpr const char* kCsvHeader =
    "sizes;n;k;t;i1;i2;variant;case_label;formula;oracle;naive;witness_weight;witness_valid;"
    "agree";

std::string csv_row(const multidom::SweepRow& row) {
  const auto& st = row.spec_stats;
  std::string out;
  out += join_sizes(row.spec);
  out += ';' + std::to_string(st.n);
  out += ';' + std::to_string(st.k);
  out += ';' + std::to_string(st.t);
  out += ';' + std::to_string(st.i1);
  out += ';' + std::to_string(st.i2);
  out += ';';
  out += multidom::variant_name(row.variant);
  out += ';' + row.case_label;
  out += ';' + std::to_string(row.formula_value);
  out += ';' + std::to_string(row.oracle_value);
  out += ';';
  if (row.naive_value) out += std::to_string(*row.naive_value);
  out += ';' + std::to_string(row.witness_weight);
  out += ';';
  out += bool_str(row.witness_valid);
  out += ';';
  out += bool_str(row.agree);
  return out;
}

json json_row(const multidom::SweepRow& row) {
  const auto& st = row.spec_stats;
  json j;
  j["sizes"] = row.spec.sizes;
  j["n"] = st.n;
  j["k"] = st.k;
  j["t"] = st.t;
  j["i1"] = st.i1;
  j["i2"] = st.i2;
  j["variant"] = multidom::variant_name(row.variant);
  j["case_label"] = row.case_label;
  j["formula"] = row.formula_value;
  j["oracle"] = row.oracle_value;
  j["naive"] = row.naive_value ? json(*row.naive_value) : json(nullptr);
  j["witness_weight"] = row.witness_weight;
  j["witness_valid"] = row.witness_valid;
  j["agree"] = row.agree;
  return j;
}

// ---------------------------------------------------------------------------
// compute

int cmd_compute(const GlobalOptions& opts, const std::string& parts_text,
                const std::string& variant_text, const std::string& engine) {
  const multidom::PartitionSpec spec = parse_parts(parts_text);
  const multidom::Variant variant = parse_variant_or_throw(variant_text);

  std::optional<std::int64_t> formula, oracle;
  std::string label;
  if (engine == "formula" || engine == "both") {
    formula = multidom::domination_number(spec, variant);
    label = multidom::classify(spec, variant);
  }
  if (engine == "oracle" || engine == "both") {
    oracle = multidom::oracle_value(spec, variant, opts.budget);
  }
  const bool both = formula && oracle;
  const bool agree = both && *formula == *oracle;

  if (opts.format == "json") {
    json j;
    j["sizes"] = spec.sizes;
    j["variant"] = multidom::variant_name(variant);
    j["engine"] = engine;
    if (formula) {
      j["formula"] = *formula;
      j["case_label"] = label;
    }
    if (oracle) j["oracle"] = *oracle;
    if (both) j["agree"] = agree;
    std::cout << j.dump(2) << "\n";
  } else if (opts.format == "csv") {
    const auto st = multidom::stats(spec);
    std::cout << kCsvHeader << "\n";
    std::cout << join_sizes(spec) << ';' << st.n << ';' << st.k << ';' << st.t << ';' << st.i1
              << ';' << st.i2 << ';' << multidom::variant_name(variant) << ';' << label << ';'
              << (formula ? std::to_string(*formula) : "") << ';'
              << (oracle ? std::to_string(*oracle) : "") << ";;;;"
              << (both ? bool_str(agree) : "") << "\n";
  } else {
    std::cout << "spec: K_{" << join_sizes(spec) << "}\n";
    std::cout << "variant: " << multidom::variant_name(variant) << "\n";
    if (formula) {
      std::cout << "formula: " << *formula << "\n";
      std::cout << "case: " << label << "\n";
    }
    if (oracle) std::cout << "oracle: " << *oracle << "\n";
    if (both) std::cout << "agreement: " << (agree ? "agree" : "MISMATCH") << "\n";
  }
  if (both && !agree) {
    std::cerr << "error: formula and oracle disagree on K_{" << join_sizes(spec) << "}\n";
    return kMismatch;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// witness

int cmd_witness(const GlobalOptions& opts, const std::string& parts_text,
                const std::string& variant_text) {
  const multidom::PartitionSpec spec = parse_parts(parts_text);
  const multidom::Variant variant = parse_variant_or_throw(variant_text);
  const std::int64_t formula = multidom::domination_number(spec, variant);

  multidom::ValidityReport report;
  std::vector<int> expanded;
  std::string counts_text;
  json counts_json;
  if (variant == multidom::Variant::Minus) {
    const multidom::MinusAssignment w = multidom::minus_witness(spec);
    report = multidom::verify(spec, w, variant);
    expanded = multidom::expand(spec, w);
    for (std::size_t i = 0; i < w.counts.size(); ++i) {
      if (i) counts_text += ';';
      counts_text += std::to_string(w.counts[i].plus) + ',' + std::to_string(w.counts[i].zero) +
                     ',' + std::to_string(w.counts[i].minus);
      counts_json.push_back({w.counts[i].plus, w.counts[i].zero, w.counts[i].minus});
    }
  } else {
    const multidom::SignedAssignment w = variant == multidom::Variant::Signed
                                             ? multidom::signed_witness(spec)
                                             : multidom::signed_total_witness(spec);
    report = multidom::verify(spec, w, variant);
    expanded = multidom::expand(spec, w);
    for (std::size_t i = 0; i < w.plus_counts.size(); ++i) {
      if (i) counts_text += ',';
      counts_text += std::to_string(w.plus_counts[i]);
    }
    counts_json = w.plus_counts;
  }

  const bool consistent = report.valid && report.weight == formula;
  if (opts.format == "json") {
    json j;
    j["sizes"] = spec.sizes;
    j["variant"] = multidom::variant_name(variant);
    j[variant == multidom::Variant::Minus ? "counts" : "plus_counts"] = counts_json;
    j["expanded"] = expanded;
    j["weight"] = report.weight;
    j["valid"] = report.valid;
    j["formula"] = formula;
    j["agree"] = consistent;
    std::cout << j.dump(2) << "\n";
  } else if (opts.format == "csv") {
    throw multidom::SpecError("--format csv is not supported for 'witness'");
  } else {
    std::cout << "spec: K_{" << join_sizes(spec) << "}\n";
    std::cout << "variant: " << multidom::variant_name(variant) << "\n";
    std::cout << (variant == multidom::Variant::Minus ? "counts: " : "plus_counts: ")
              << counts_text << "\n";
    std::cout << "expanded: " << join_values(expanded) << "\n";
    std::cout << "weight: " << report.weight << "\n";
    std::cout << "valid: " << bool_str(report.valid) << "\n";
    std::cout << "formula: " << formula << "\n";
  }
  if (!consistent) {
    std::cerr << "error: witness for K_{" << join_sizes(spec)
              << "} does not certify the formula value\n";
    return kMismatch;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

using AnyAssignment = std::variant<multidom::SignedAssignment, multidom::MinusAssignment>;

// One line per part, 1-based: "i:plus_count" or "i:plus,zero,minus";
// '#' starts a comment.
AnyAssignment read_assignment_file(const std::string& path, const multidom::PartitionSpec& spec) {
  std::ifstream in(path);
  if (!in) throw multidom::SpecError("cannot open assignment file '" + path + "'");

  const int k = static_cast<int>(spec.sizes.size());
  std::vector<std::optional<std::vector<std::int64_t>>> entries(k);
  int fields = 0;  // 1 = signed lines, 3 = minus lines
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trimmed(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw multidom::SpecError("malformed assignment line (missing ':'): '" + line + "'");
    }
    const std::int64_t index = parse_int(line.substr(0, colon), "part index");
    if (index < 1 || index > k) {
      throw multidom::SpecError("part index " + std::to_string(index) + " out of range 1.." +
                                std::to_string(k));
    }
    std::vector<std::int64_t> numbers;
    for (const std::string& item : split(line.substr(colon + 1), ',')) {
      numbers.push_back(parse_int(item, "count"));
    }
    if (numbers.size() != 1 && numbers.size() != 3) {
      throw multidom::SpecError("expected 'i:plus' or 'i:plus,zero,minus', got '" + line + "'");
    }
    if (fields == 0) fields = static_cast<int>(numbers.size());
    if (fields != static_cast<int>(numbers.size())) {
      throw multidom::SpecError("assignment file mixes signed and minus lines");
    }
    if (entries[index - 1]) {
      throw multidom::SpecError("duplicate line for part " + std::to_string(index));
    }
    entries[index - 1] = std::move(numbers);
  }
  for (int i = 0; i < k; ++i) {
    if (!entries[i]) {
      throw multidom::SpecError("assignment file is missing part " + std::to_string(i + 1));
    }
  }
  if (fields == 1) {
    multidom::SignedAssignment a;
    for (int i = 0; i < k; ++i) a.plus_counts.push_back((*entries[i])[0]);
    multidom::validate_assignment(spec, a);
    return a;
  }
  multidom::MinusAssignment a;
  for (int i = 0; i < k; ++i) {
    a.counts.push_back({(*entries[i])[0], (*entries[i])[1], (*entries[i])[2]});
  }
  multidom::validate_assignment(spec, a);
  return a;
}

int cmd_verify(const GlobalOptions& opts, const std::string& parts_text,
               const std::string& variant_text, const std::string& path) {
  const multidom::PartitionSpec spec = parse_parts(parts_text);
  const multidom::Variant variant = parse_variant_or_throw(variant_text);
  const AnyAssignment assignment = read_assignment_file(path, spec);

  const multidom::ValidityReport report = std::visit(
      [&](const auto& a) { return multidom::verify(spec, a, variant); }, assignment);

  if (opts.format == "json") {
    json j;
    j["sizes"] = spec.sizes;
    j["variant"] = multidom::variant_name(variant);
    j["weight"] = report.weight;
    j["valid"] = report.valid;
    j["min_neighborhood_sums"] = report.min_neighborhood_sum;
    j["tightest_part"] = report.tightest_part + 1;  // 1-based, as in the file format
    j["tightest_value"] = report.tightest_value;
    std::cout << j.dump(2) << "\n";
  } else if (opts.format == "csv") {
    throw multidom::SpecError("--format csv is not supported for 'verify'");
  } else {
    std::cout << "spec: K_{" << join_sizes(spec) << "}\n";
    std::cout << "variant: " << multidom::variant_name(variant) << "\n";
    std::cout << "weight: " << report.weight << "\n";
    std::cout << "valid: " << bool_str(report.valid) << "\n";
    std::string sums;
    for (std::size_t i = 0; i < report.min_neighborhood_sum.size(); ++i) {
      if (i) sums += ',';
      sums += std::to_string(report.min_neighborhood_sum[i]);
    }
    std::cout << "min_neighborhood_sums: " << sums << "\n";
    std::cout << "tightest: part " << report.tightest_part + 1 << ", value "
              << report.tightest_value << "\n";
  }
  return report.valid ? kOk : kInvalid;
}

// ---------------------------------------------------------------------------
// sweep

int cmd_sweep(const GlobalOptions& opts, std::int64_t max_n, int max_k,
              const std::string& variants_text, const std::string& out_path) {
  multidom::SweepOptions options;
  options.max_n = max_n;
  options.max_k = max_k;
  options.variants = parse_variant_list(variants_text);
  options.budget = opts.budget;
  if (options.variants.empty()) throw multidom::SpecError("--variants selected nothing");

  const multidom::SweepReport report = multidom::run_sweep(options);

  std::ostringstream rows;
  if (opts.format == "json") {
    json arr = json::array();
    for (const auto& row : report.rows) arr.push_back(json_row(row));
    rows << arr.dump(2) << "\n";
  } else {
    rows << kCsvHeader << "\n";
    for (const auto& row : report.rows) rows << csv_row(row) << "\n";
  }

  std::ostream* summary = &std::cout;
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw multidom::SpecError("cannot open output file '" + out_path + "'");
    out << rows.str();
  } else {
    std::cout << rows.str();
    summary = &std::cerr;
  }

  *summary << "instances: " << report.rows.size() << "\n";
  *summary << "mismatches: " << report.mismatch_count << "\n";
  *summary << "branch coverage:\n";
  for (multidom::Variant v : options.variants) {
    for (const std::string& label : multidom::case_labels(v)) {
      const std::int64_t count = report.case_counts.at(label);
      *summary << "  " << label << ": " << count << (count == 0 ? " (uncovered)" : "") << "\n";
    }
  }
  return report.mismatch_count > 0 ? kMismatch : kOk;
}

// ---------------------------------------------------------------------------
// bench

struct TimingStats {
  double min_ns = 0;
  double median_ns = 0;
  double mean_ns = 0;
};

TimingStats summarize(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  TimingStats stats;
  stats.min_ns = samples.front();
  stats.median_ns = samples[samples.size() / 2];
  double total = 0;
  for (double s : samples) total += s;
  stats.mean_ns = total / static_cast<double>(samples.size());
  return stats;
}

int cmd_bench(const GlobalOptions& opts, const std::string& parts_text,
              const std::string& variant_text, int repetitions) {
  const multidom::PartitionSpec spec = parse_parts(parts_text);
  const multidom::Variant variant = parse_variant_or_throw(variant_text);
  if (repetitions < 1) throw multidom::SpecError("--repetitions must be at least 1");

  using clock = std::chrono::steady_clock;
  volatile std::int64_t sink = 0;

  // The formula is O(k) and far below timer resolution, so each sample
  // times a batch of calls.
  constexpr int kFormulaBatch = 1024;
  std::vector<double> formula_ns(repetitions);
  for (int r = 0; r < repetitions; ++r) {
    const auto start = clock::now();
    for (int i = 0; i < kFormulaBatch; ++i) sink = multidom::domination_number(spec, variant);
    const auto stop = clock::now();
    formula_ns[r] =
        std::chrono::duration<double, std::nano>(stop - start).count() / kFormulaBatch;
  }
  std::vector<double> oracle_ns(repetitions);
  for (int r = 0; r < repetitions; ++r) {
    const auto start = clock::now();
    sink = multidom::oracle_value(spec, variant, opts.budget);
    const auto stop = clock::now();
    oracle_ns[r] = std::chrono::duration<double, std::nano>(stop - start).count();
  }
  (void)sink;

  const TimingStats formula = summarize(std::move(formula_ns));
  const TimingStats oracle = summarize(std::move(oracle_ns));
  if (opts.format == "json") {
    json j;
    j["sizes"] = spec.sizes;
    j["variant"] = multidom::variant_name(variant);
    j["repetitions"] = repetitions;
    j["formula_ns"] = {{"min", formula.min_ns}, {"median", formula.median_ns}, {"mean", formula.mean_ns}};
    j["oracle_ns"] = {{"min", oracle.min_ns}, {"median", oracle.median_ns}, {"mean", oracle.mean_ns}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "spec: K_{" << join_sizes(spec) << "}\n";
    std::cout << "variant: " << multidom::variant_name(variant) << "\n";
    std::cout << "repetitions: " << repetitions << "\n";
    std::cout << "formula: min=" << formula.min_ns << "ns median=" << formula.median_ns
              << "ns mean=" << formula.mean_ns << "ns\n";
    std::cout << "oracle: min=" << oracle.min_ns << "ns median=" << oracle.median_ns
              << "ns mean=" << oracle.mean_ns << "ns\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed, signed total and minus domination numbers of complete multipartite graphs"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--budget-states", opts.budget.max_states,
                 "state budget for the reduced exhaustive search")
      ->capture_default_str();
  app.add_option("--budget-naive", opts.budget.max_naive_labelings,
                 "labeling budget for the naive per-vertex search")
      ->capture_default_str();

  std::string compute_parts, compute_variant = "signed", compute_engine = "formula";
  CLI::App* compute = app.add_subcommand("compute", "Evaluate a domination number");
  compute->fallthrough();
  compute->add_option("--parts", compute_parts, "comma-separated part sizes, e.g. 3,4")
      ->required();
  compute->add_option("--variant", compute_variant, "signed | signed-total | minus")
      ->check(CLI::IsMember({"signed", "signed-total", "minus"}));
  compute->add_option("--engine", compute_engine, "formula | oracle | both")
      ->check(CLI::IsMember({"formula", "oracle", "both"}));

  std::string witness_parts, witness_variant = "signed";
  CLI::App* witness = app.add_subcommand("witness", "Construct an optimal certificate");
  witness->fallthrough();
  witness->add_option("--parts", witness_parts, "comma-separated part sizes")->required();
  witness->add_option("--variant", witness_variant, "signed | signed-total | minus")
      ->check(CLI::IsMember({"signed", "signed-total", "minus"}));

  std::string verify_parts, verify_variant = "signed", verify_file;
  CLI::App* verify = app.add_subcommand("verify", "Check an assignment from a file");
  verify->fallthrough();
  verify->add_option("--parts", verify_parts, "comma-separated part sizes")->required();
  verify->add_option("--variant", verify_variant, "signed | signed-total | minus")
      ->check(CLI::IsMember({"signed", "signed-total", "minus"}));
  verify->add_option("--assignment", verify_file, "assignment file (one 'i:counts' line per part)")
      ->required();

  std::int64_t sweep_max_n = 10;
  int sweep_max_k = 4;
  std::string sweep_variants = "all", sweep_out;
  CLI::App* sweep = app.add_subcommand("sweep", "Cross-validate every spec in a range");
  sweep->fallthrough();
  sweep->add_option("--max-n", sweep_max_n, "maximum total vertex count")->required();
  sweep->add_option("--max-k", sweep_max_k, "maximum part count")->required();
  sweep->add_option("--variants", sweep_variants, "'all' or a comma list of variants");
  sweep->add_option("--out", sweep_out, "report file (default: stdout)");

  std::string bench_parts, bench_variant = "signed";
  int bench_repetitions = 100;
  CLI::App* bench = app.add_subcommand("bench", "Time formula vs. reduced oracle");
  bench->fallthrough();
  bench->add_option("--parts", bench_parts, "comma-separated part sizes")->required();
  bench->add_option("--variant", bench_variant, "signed | signed-total | minus")
      ->check(CLI::IsMember({"signed", "signed-total", "minus"}));
  bench->add_option("--repetitions", bench_repetitions, "timing samples per engine")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(opts, compute_parts, compute_variant, compute_engine);
    if (witness->parsed()) return cmd_witness(opts, witness_parts, witness_variant);
    if (verify->parsed()) return cmd_verify(opts, verify_parts, verify_variant, verify_file);
    if (sweep->parsed()) return cmd_sweep(opts, sweep_max_n, sweep_max_k, sweep_variants, sweep_out);
    if (bench->parsed()) return cmd_bench(opts, bench_parts, bench_variant, bench_repetitions);
  } catch (const multidom::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const multidom::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
