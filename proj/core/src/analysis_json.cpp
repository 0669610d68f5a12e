// SPDX-License-Identifier: Apache-2.0
#include "citemetric/analysis_json.hpp"

#include <cmath>

namespace citemetric {

using nlohmann::json;

namespace {

json real(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json real(const std::optional<double>& x) { return x ? real(*x) : json(nullptr); }

json reals(const std::vector<double>& xs) {
  json out = json::array();
  for (double x : xs) out.push_back(real(x));
  return out;
}

json mean_sd_json(const MeanSd& m) {
  return {{"n", m.n}, {"mean", real(m.mean)}, {"sd", real(m.sd)}};
}

json test_json(const stats::TestResult& t) {
  return {{"method", stats::to_string(t.method)},
          {"statistic", real(t.statistic)},
          {"df1", real(t.df1)},
          {"df2", t.df2 ? real(*t.df2) : json(nullptr)},
          {"p_value", real(t.p_value)},
          {"n", t.n}};
}

json conventions(double alpha) {
  return {{"log_citations", "log10(x + 1)"},
          {"log_articles", "log10(x), undefined for 0"},
          {"post_hoc", "tukey-kramer on the variable scale"},
          {"alpha", alpha}};
}

}  // namespace

json to_json(const GroupSummary& g) {
  return {{"label", g.label},
          {"n_journals", g.n_journals},
          {"total_articles", g.total_articles},
          {"total_ga_articles", g.total_ga_articles},
          {"total_cites", g.total_cites},
          {"log10_cr", mean_sd_json(g.log10_cr)},
          {"ca_mean", mean_sd_json(g.ca)},
          {"ratio_ba", mean_sd_json(g.ratio_ba)},
          {"log10_air", mean_sd_json(g.log10_air)},
          {"pi_ld", mean_sd_json(g.pi_ld)}};
}

json to_json(const ComparisonTable& t) {
  json doc;
  doc["dimension"] = to_string(t.dimension);
  doc["area"] = to_string(t.area);
  doc["method"] = to_string(t.method);
  doc["conventions"] = conventions(t.alpha);

  json variables = json::array();
  json rows = json::array();
  json tests = json::object();
  json letters = json::object();
  json notes = json::object();
  for (const auto& g : t.rows) rows.push_back(to_json(g));
  for (const auto& vc : t.variables) {
    const std::string name(to_string(vc.variable));
    variables.push_back(name);
    json entry = {{"groups", vc.labels}, {"summaries", json::array()}};
    for (const auto& m : vc.summaries) entry["summaries"].push_back(mean_sd_json(m));
    entry["result"] = vc.test ? test_json(*vc.test) : json(nullptr);
    tests[name] = std::move(entry);
    if (vc.letters) {
      json per = json::object();
      for (std::size_t i = 0; i < vc.letters->labels.size(); ++i)
        per[vc.letters->labels[i]] = vc.letters->letters[i];
      letters[name] = std::move(per);
    } else {
      letters[name] = nullptr;
    }
    if (!vc.note.empty()) notes[name] = vc.note;
  }
  json excluded = json::array();
  for (const auto& e : t.excluded) excluded.push_back({{"label", e.label}, {"reason", e.reason}});

  doc["variables"] = std::move(variables);
  doc["rows"] = std::move(rows);
  doc["tests"] = std::move(tests);
  doc["letters"] = std::move(letters);
  doc["excluded"] = std::move(excluded);
  doc["notes"] = std::move(notes);
  return doc;
}

json to_json(const CorrelationMatrix& m) {
  json doc;
  json names = json::array();
  for (Variable v : m.variables) names.push_back(to_string(v));
  json r = json::array(), p = json::array(), n = json::array(), sig = json::array();
  for (std::size_t i = 0; i < m.variables.size(); ++i) {
    json rr = json::array(), pp = json::array(), nn = json::array(), ss = json::array();
    for (std::size_t j = 0; j < m.variables.size(); ++j) {
      rr.push_back(real(m.r[i][j]));
      pp.push_back(real(m.p_value[i][j]));
      nn.push_back(m.n[i][j]);
      ss.push_back(static_cast<bool>(m.significant[i][j]));
    }
    r.push_back(std::move(rr));
    p.push_back(std::move(pp));
    n.push_back(std::move(nn));
    sig.push_back(std::move(ss));
  }
  doc["variables"] = std::move(names);
  doc["r"] = std::move(r);
  doc["p_value"] = std::move(p);
  doc["n"] = std::move(n);
  doc["significant"] = std::move(sig);
  doc["alpha"] = m.alpha;
  doc["method"] = "spearman";
  doc["conventions"] = conventions(m.alpha);
  return doc;
}

json to_json(const CitationFactorAnalysis& a) {
  json doc;
  json names = json::array();
  for (Variable v : a.variables) names.push_back(to_string(v));
  doc["variables"] = std::move(names);
  doc["n"] = a.n;
  doc["eigenvalues"] = reals(a.factor.eigenvalues);
  doc["retained"] = a.factor.retained;
  doc["loadings"] = reals(a.factor.loadings);
  doc["communalities"] = reals(a.factor.communalities);
  doc["contributions"] = reals(a.factor.contributions);
  doc["variance_explained"] = real(a.factor.variance_explained);
  doc["contributing"] = a.contributing;
  doc["thresholds"] = {{"eigenvalue", 1.0},
                       {"communality", kCommunalityThreshold},
                       {"loading", kLoadingThreshold}};
  doc["conventions"] = conventions(0.05);
  return doc;
}

json to_json(const CitationRegression& reg) {
  const auto& f = reg.fit;
  json doc;
  doc["response"] = to_string(reg.response);
  json names = json::array({"intercept"});
  for (const auto& p : reg.predictors) names.push_back(p);
  doc["terms"] = std::move(names);
  doc["coefficients"] = reals(f.coefficients);
  doc["r2"] = real(f.r2);
  doc["r2_adjusted"] = real(f.r2_adjusted);
  doc["f"] = {{"statistic", real(f.f_statistic)},
              {"df1", real(f.f_df1)},
              {"df2", real(f.f_df2)},
              {"p_value", real(f.f_p_value)}};
  doc["sequential_ss"] = reals(f.sequential_ss);
  doc["residual_ss"] = real(f.residual_ss);
  doc["total_ss"] = real(f.total_ss);
  doc["vif"] = reals(f.vif);
  doc["n"] = f.n;
  doc["conventions"] = conventions(0.05);
  return doc;
}

std::string dump_json(const json& doc) {
  return doc.dump(2, ' ', false, json::error_handler_t::replace) + "\n";
}

}  // namespace citemetric
