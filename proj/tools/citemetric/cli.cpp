// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "citemetric/analysis.hpp"
#include "citemetric/analysis_json.hpp"
#include "citemetric/classify.hpp"
#include "citemetric/corpus_json.hpp"
#include "citemetric/error.hpp"
#include "citemetric/indicators.hpp"
#include "citemetric/ingest.hpp"

namespace citemetric::cli {

namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path + ": cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw DataError(path + ": read failed");
  return buf.str();
}

void write_output(const std::string& path, const std::string& bytes, std::ostream& out) {
  if (path.empty()) {
    out << bytes;
    return;
  }
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw DataError(path + ": cannot open for writing");
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    f.close();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw DataError(path + ": write failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw DataError(path + ": cannot replace file: " + ec.message());
  }
}

// Attach the file name to parse and domain errors raised while reading it.
template <class F>
auto with_file(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw DataError(path + ": " + e.what());
  }
}

Area parse_area_flag(const std::string& text) {
  if (text == "ciencias") return Area::Ciencias;
  if (text == "sociales") return Area::CienciasSociales;
  throw UsageError("--area must be ciencias or sociales, got '" + text + "'");
}

YearWindow parse_window(const std::string& text) {
  const auto colon = text.find(':');
  YearWindow w;
  try {
    if (colon == std::string::npos) throw std::invalid_argument("no colon");
    std::size_t used = 0;
    w.start_year = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("start");
    const std::string end = text.substr(colon + 1);
    w.end_year = std::stoi(end, &used);
    if (used != end.size()) throw std::invalid_argument("end");
  } catch (const std::exception&) {
    throw UsageError("--window must look like 2003:2007, got '" + text + "'");
  }
  if (w.start_year > w.end_year) throw UsageError("--window start year exceeds end year");
  return w;
}

AreaMeanMode parse_area_mean(const std::string& text) {
  return text == "pooled" ? AreaMeanMode::Pooled : AreaMeanMode::MeanOfRatios;
}

std::vector<Variable> parse_variables(const std::string& list) {
  std::vector<Variable> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto v = parse_variable(item);
    if (!v) throw UsageError("unknown variable '" + item + "'");
    out.push_back(*v);
  }
  if (out.empty()) throw UsageError("--vars is empty");
  return out;
}

JournalCorpus load_checked(const std::string& path) {
  const std::string text = read_file(path);
  JournalCorpus corpus = with_file(path, [&] { return load_corpus(text); });
  const auto issues = validate_corpus(corpus);
  if (!issues.empty()) {
    std::string msg = path + ": invalid corpus: " + issues.front();
    if (issues.size() > 1) msg += " (and " + std::to_string(issues.size() - 1) + " more)";
    throw DataError(msg);
  }
  return corpus;
}

Area resolve_area(const JournalCorpus& corpus, const std::string& flag) {
  if (!flag.empty()) return parse_area_flag(flag);
  std::set<Area> areas;
  for (const auto& j : corpus.journals) areas.insert(j.area);
  if (areas.size() == 1) return *areas.begin();
  if (areas.empty()) throw DataError("corpus has no journals");
  throw UsageError("--area is required: the corpus holds journals from both areas");
}

nlohmann::json report_json(const IngestReport& r) {
  nlohmann::json decisions = nlohmann::json::array();
  for (const auto& d : r.decisions) {
    decisions.push_back({{"rule", to_string(d.rule)},
                         {"kept_line", d.kept_line ? nlohmann::json(*d.kept_line) : nlohmann::json(nullptr)},
                         {"dropped_lines", d.dropped_lines},
                         {"similarity", d.similarity ? nlohmann::json(*d.similarity) : nlohmann::json(nullptr)}});
  }
  return {{"rows_read", r.rows_read},
          {"rows_kept", r.rows_kept},
          {"rows_dropped_incomplete", r.rows_dropped_incomplete},
          {"rows_dropped_duplicate", r.rows_dropped_duplicate},
          {"rows_flagged_review", r.rows_flagged_review},
          {"decisions", std::move(decisions)}};
}

struct Options {
  std::string registry, records_dir, alias, window = "2003:2007", report;
  std::string corpus, area, area_mean = "ratios", by, method = "anova", vars, response = "logcr";
  std::string quartile_mode = "empirical", format = "md", out;
  std::optional<int> top;
  double alpha = 0.05;
  double title_threshold = 0.92;
};

int run_ingest(const Options& o, std::ostream& out, std::ostream& err) {
  DedupConfig config;
  config.window = parse_window(o.window);
  if (!(o.title_threshold > 0.0 && o.title_threshold <= 1.0))
    throw UsageError("--title-threshold must be in (0, 1]");
  config.title_threshold = o.title_threshold;

  const std::string registry_text = read_file(o.registry);
  const Registry registry = with_file(o.registry, [&] { return parse_registry(registry_text); });
  if (!o.alias.empty()) {
    const std::string alias_text = read_file(o.alias);
    config.alias_map = with_file(o.alias, [&] { return parse_alias_file(alias_text); });
  }

  const fs::path dir(o.records_dir);
  if (!fs::is_directory(dir)) throw DataError(o.records_dir + ": not a directory");
  std::set<std::string> known;
  for (const auto& j : registry.journals) known.insert(j.journal_id);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".csv") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files)
    if (!known.count(f.stem().string()))
      throw DataError(f.string() + ": journal id '" + f.stem().string() + "' is not in the registry");

  std::map<std::string, std::vector<ArticleRecord>> records;
  IngestReport total;
  for (const auto& j : registry.journals) {
    const fs::path file = dir / (j.journal_id + ".csv");
    if (!fs::exists(file)) {
      err << "ingest: no citation export for " << j.journal_id << ", assuming zero records\n";
      records[j.journal_id];
      continue;
    }
    const std::string path = file.string();
    const std::string text = read_file(path);
    auto parsed = with_file(path, [&] { return parse_citation_export(text, j.journal_id); });
    DedupOutcome outcome = with_file(path, [&] { return deduplicate(std::move(parsed), config); });
    total += outcome.report;
    records[j.journal_id] = std::move(outcome.records);
  }

  const JournalCorpus corpus = with_file(o.registry, [&] { return build_corpus(registry, records, config.window); });
  write_output(o.out, dump_corpus(corpus), out);
  if (!o.report.empty()) write_output(o.report, dump_json(report_json(total)), out);
  err << "ingest: rows_read=" << total.rows_read << " kept=" << total.rows_kept
      << " dropped_incomplete=" << total.rows_dropped_incomplete
      << " dropped_duplicate=" << total.rows_dropped_duplicate
      << " flagged_review=" << total.rows_flagged_review << "\n";
  return kExitOk;
}

std::vector<IndicatorSet> indicator_sets(const Options& o, const JournalCorpus& corpus, Area area) {
  return area_indicators(corpus, area, parse_area_mean(o.area_mean));
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw UsageError("--alpha must be in (0, 1)");
}

int run_indicators(const Options& o, std::ostream& out) {
  const JournalCorpus corpus = load_checked(o.corpus);
  std::vector<IndicatorSet> sets;
  if (o.area.empty()) {
    sets = compute_corpus_indicators(corpus, parse_area_mean(o.area_mean));
  } else {
    sets = indicator_sets(o, corpus, parse_area_flag(o.area));
  }
  write_output(o.out, indicators_csv(sets), out);
  return kExitOk;
}

int run_compare(const Options& o, std::ostream& out) {
  check_alpha(o.alpha);
  const JournalCorpus corpus = load_checked(o.corpus);
  const Area area = resolve_area(corpus, o.area);
  const Dimension dim = o.by == "library" ? Dimension::ByLibrary : Dimension::ByCategory;
  const auto vars = o.vars.empty() ? default_comparison_variables(dim) : parse_variables(o.vars);
  const TestFamily method = o.method == "kw" ? TestFamily::RankBased : TestFamily::Parametric;
  const auto sets = indicator_sets(o, corpus, area);
  const auto table = with_file(o.corpus, [&] { return compare_groups(sets, area, dim, vars, method, o.alpha); });
  write_output(o.out, dump_json(to_json(table)), out);
  return kExitOk;
}

int run_correlate(const Options& o, std::ostream& out) {
  check_alpha(o.alpha);
  const JournalCorpus corpus = load_checked(o.corpus);
  const Area area = resolve_area(corpus, o.area);
  std::vector<Variable> vars;
  if (o.vars.empty()) {
    for (Variable v : kAllVariables)
      if (v != Variable::Cpn) vars.push_back(v);
  } else {
    vars = parse_variables(o.vars);
  }
  const auto sets = indicator_sets(o, corpus, area);
  const auto matrix = with_file(o.corpus, [&] { return correlation_matrix(sets, vars, o.alpha); });
  write_output(o.out, dump_json(to_json(matrix)), out);
  return kExitOk;
}

int run_factor(const Options& o, std::ostream& out) {
  const JournalCorpus corpus = load_checked(o.corpus);
  const Area area = resolve_area(corpus, o.area);
  const auto sets = indicator_sets(o, corpus, area);
  const auto result = with_file(o.corpus, [&] { return citation_factor_analysis(sets); });
  write_output(o.out, dump_json(to_json(result)), out);
  return kExitOk;
}

int run_regress(const Options& o, std::ostream& out) {
  const JournalCorpus corpus = load_checked(o.corpus);
  const Area area = resolve_area(corpus, o.area);
  const auto response = o.response == "h" ? RegressionResponse::H : RegressionResponse::LogCr;
  const auto sets = indicator_sets(o, corpus, area);
  const auto result = with_file(o.corpus, [&] { return citation_regression(sets, response); });
  write_output(o.out, dump_json(to_json(result)), out);
  return kExitOk;
}

int run_classify(const Options& o, std::ostream& out) {
  const JournalCorpus corpus = load_checked(o.corpus);
  const Area area = resolve_area(corpus, o.area);
  const auto mode = o.quartile_mode == "fixed" ? QuartileMode::Fixed : QuartileMode::Empirical;
  const auto format = parse_report_format(o.format);
  if (!format) throw UsageError("--format must be csv, json or md");
  const auto sets = indicator_sets(o, corpus, area);
  const auto rows = with_file(o.corpus, [&] { return classify(sets, mode); });
  write_output(o.out, emit_report(rows, *format, o.top), out);
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Journal citation indicators, statistics and h-index classification", "citemetric"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");
  Options o;

  const auto areas = CLI::IsMember({"ciencias", "sociales"});
  const auto area_means = CLI::IsMember({"ratios", "pooled"});
  auto add_corpus = [&](CLI::App* sub) {
    sub->add_option("--corpus", o.corpus, "Corpus JSON produced by ingest")->required();
    sub->add_option("--area-mean", o.area_mean, "Area mean for CPN: ratios or pooled")
        ->check(area_means)
        ->capture_default_str();
    sub->add_option("--out", o.out, "Output file (stdout when omitted)");
  };

  auto* ingest = app.add_subcommand("ingest", "Parse and deduplicate citation exports into a corpus");
  ingest->add_option("--registry", o.registry, "Journal registry CSV")->required();
  ingest->add_option("--records-dir", o.records_dir, "Directory of <journal_id>.csv exports")->required();
  ingest->add_option("--alias", o.alias, "Title alias CSV (from_title,to_title)");
  ingest->add_option("--window", o.window, "Publication years START:END")->capture_default_str();
  ingest->add_option("--title-threshold", o.title_threshold, "Duplicate title similarity")
      ->capture_default_str();
  ingest->add_option("--report", o.report, "Write the dedup report as JSON");
  ingest->add_option("--out", o.out, "Output corpus JSON (stdout when omitted)");

  auto* indicators = app.add_subcommand("indicators", "Per-journal indicator table (CSV)");
  add_corpus(indicators);
  indicators->add_option("--area", o.area, "ciencias or sociales (all journals when omitted)")->check(areas);

  auto* compare = app.add_subcommand("compare", "Compare indicators across libraries or categories");
  add_corpus(compare);
  compare->add_option("--area", o.area, "ciencias or sociales")->check(areas);
  compare->add_option("--by", o.by, "library or category")
      ->required()
      ->check(CLI::IsMember({"library", "category"}));
  compare->add_option("--method", o.method, "anova or kw")
      ->check(CLI::IsMember({"anova", "kw"}))
      ->capture_default_str();
  compare->add_option("--vars", o.vars, "Comma-separated variables");
  compare->add_option("--alpha", o.alpha, "Significance level")->capture_default_str();

  auto* correlate = app.add_subcommand("correlate", "Spearman correlation matrix");
  add_corpus(correlate);
  correlate->add_option("--area", o.area, "ciencias or sociales")->check(areas);
  correlate->add_option("--vars", o.vars, "Comma-separated variables");
  correlate->add_option("--alpha", o.alpha, "Significance level")->capture_default_str();

  auto* factor = app.add_subcommand("factor", "First-factor analysis of the citation indicators");
  add_corpus(factor);
  factor->add_option("--area", o.area, "ciencias or sociales")->check(areas);

  auto* regress = app.add_subcommand("regress", "Citation regression on GA articles and PI_LD");
  add_corpus(regress);
  regress->add_option("--area", o.area, "ciencias or sociales")->check(areas);
  regress->add_option("--response", o.response, "logcr or h")
      ->check(CLI::IsMember({"logcr", "h"}))
      ->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "Rank journals by h and cut into quartiles");
  add_corpus(classify_cmd);
  classify_cmd->add_option("--area", o.area, "ciencias or sociales")->check(areas);
  classify_cmd->add_option("--quartile-mode", o.quartile_mode, "empirical or fixed")
      ->check(CLI::IsMember({"empirical", "fixed"}))
      ->capture_default_str();
  classify_cmd->add_option("--top", o.top, "Keep quartiles 1..N")->check(CLI::Range(1, 4));
  classify_cmd->add_option("--format", o.format, "csv, json or md")
      ->check(CLI::IsMember({"csv", "json", "md"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    err << app.help();
    return kExitUsage;
  }

  try {
    if (*ingest) return run_ingest(o, out, err);
    if (*indicators) return run_indicators(o, out);
    if (*compare) return run_compare(o, out);
    if (*correlate) return run_correlate(o, out);
    if (*factor) return run_factor(o, out);
    if (*regress) return run_regress(o, out);
    if (*classify_cmd) return run_classify(o, out);
  } catch (const UsageError& e) {
    err << "citemetric: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    err << "citemetric: " << e.what() << "\n";
    return kExitData;
  } catch (const Error& e) {
    err << "citemetric: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return kExitData;
  } catch (const fs::filesystem_error& e) {
    err << "citemetric: " << e.what() << "\n";
    return kExitData;
  }
  err << app.help();
  return kExitUsage;
}

int dispatch(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return dispatch(args, std::cout, std::cerr);
}

}  // namespace citemetric::cli
