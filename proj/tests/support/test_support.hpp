// SPDX-License-Identifier: Apache-2.0
// Shared helpers for unit and acceptance tests: fixture paths, temp dirs,
// CLI capture, seeded generators and brute-force oracles.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "citemetric/corpus.hpp"
#include "cli.hpp"

namespace citemetric::testing {

namespace fs = std::filesystem;

inline fs::path fixture_dir() { return fs::path(CITEMETRIC_FIXTURE_DIR); }
inline fs::path ciencias_dir() { return fixture_dir() / "ciencias"; }

inline std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void spit(const fs::path& p, const std::string& bytes) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << bytes;
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::uint64_t counter = 0;
    std::random_device rd;
    path_ = fs::temp_directory_path() /
            ("citemetric-" + tag + "-" + std::to_string(rd()) + "-" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

inline CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = cli::dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// ---- oracles ---------------------------------------------------------------

inline std::uint64_t brute_h_index(const std::vector<std::uint64_t>& cites) {
  std::uint64_t best = 0;
  for (std::uint64_t k = 0; k <= cites.size(); ++k) {
    const auto c = static_cast<std::uint64_t>(
        std::count_if(cites.begin(), cites.end(), [&](std::uint64_t x) { return x >= k; }));
    if (c >= k) best = k;
  }
  return best;
}

inline std::size_t naive_levenshtein(const std::u32string& a, const std::u32string& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i)
    for (std::size_t j = 1; j <= b.size(); ++j)
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0u : 1u)});
  return d[a.size()][b.size()];
}

/// Mid-ranks by counting: rank = #less + (#equal + 1) / 2.
inline std::vector<double> counting_ranks(const std::vector<double>& x) {
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double less = 0, equal = 0;
    for (double v : x) {
      if (v < x[i]) ++less;
      if (v == x[i]) ++equal;
    }
    r[i] = less + (equal + 1.0) / 2.0;
  }
  return r;
}

/// Textbook Pearson with long double accumulation.
inline double textbook_pearson(const std::vector<double>& x, const std::vector<double>& y) {
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= x.size();
  my /= y.size();
  long double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

/// Two-sided exact permutation p for Spearman's r (n <= 10).
inline double exact_spearman_p(const std::vector<double>& x, const std::vector<double>& y) {
  const auto rx = counting_ranks(x);
  const auto ry = counting_ranks(y);
  const double observed = std::abs(textbook_pearson(rx, ry));
  std::vector<double> perm = ry;
  std::sort(perm.begin(), perm.end());
  std::size_t total = 0, extreme = 0;
  do {
    ++total;
    if (std::abs(textbook_pearson(rx, perm)) >= observed - 1e-12) ++extreme;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(extreme) / static_cast<double>(total);
}

// ---- generators ------------------------------------------------------------

using Rng = std::mt19937_64;

inline std::vector<std::uint64_t> random_cites(Rng& rng, std::size_t max_len, std::uint64_t max_cite) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::uint64_t> cite(0, max_cite);
  std::vector<std::uint64_t> v(len(rng));
  for (auto& c : v) c = cite(rng);
  return v;
}

/// Values drawn from a small integer range so ties are common.
inline std::vector<double> tied_values(Rng& rng, std::size_t n, int levels) {
  std::uniform_int_distribution<int> d(0, levels - 1);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

inline std::string random_word(Rng& rng) {
  static const char* const kWords[] = {
      "efecto", "clima",  "café",     "suelo",  "agua",    "bosque", "especies", "análisis",
      "salud",  "niños",  "modelo",   "red",    "energía", "dengue", "malaria",  "calidad",
      "vida",   "riesgo", "genética", "río",    "páramo",  "costa",  "datos",    "estudio",
      "caribe", "maíz",   "bovinos",  "hongos", "virus",   "cáncer", "embarazo", "nutrición"};
  std::uniform_int_distribution<std::size_t> d(0, std::size(kWords) - 1);
  return kWords[d(rng)];
}

inline std::string random_title(Rng& rng) {
  std::uniform_int_distribution<int> len(2, 7);
  std::string t;
  for (int i = 0, n = len(rng); i < n; ++i) {
    if (i) t += ' ';
    t += random_word(rng);
  }
  return t;
}

/// One journal's raw records with duplicates, case/punctuation variants,
/// incomplete rows and out-of-window years mixed in.
inline std::vector<ArticleRecord> random_records(Rng& rng, const std::string& journal_id) {
  std::uniform_int_distribution<int> count(0, 30);
  std::uniform_int_distribution<int> year(2001, 2009);
  std::uniform_int_distribution<std::uint64_t> cites(0, 6);
  std::uniform_int_distribution<int> coin(0, 9);
  std::vector<ArticleRecord> out;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    ArticleRecord r;
    r.journal_id = journal_id;
    r.line = out.size() + 2;
    const int kind = coin(rng);
    if (kind == 0 && !out.empty()) {
      // Variant of an earlier record.
      std::uniform_int_distribution<std::size_t> pick(0, out.size() - 1);
      const auto& base = out[pick(rng)];
      r.title = base.title + (coin(rng) < 5 ? "." : "");
      r.year = base.year;
    } else if (kind == 1) {
      r.title = coin(rng) < 5 ? "" : random_title(rng);
      if (coin(rng) < 5) r.year = year(rng);
    } else {
      r.title = random_title(rng);
      r.year = year(rng);
    }
    r.cites = cites(rng);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace citemetric::testing
