// SPDX-License-Identifier: Apache-2.0
#include "citemetric/corpus_json.hpp"

#include "citemetric/error.hpp"

namespace citemetric {

using nlohmann::json;

json corpus_to_json(const JournalCorpus& corpus) {
  json doc;
  doc["window"] = {{"start_year", corpus.window.start_year},
                   {"end_year", corpus.window.end_year}};

  json journals = json::array();
  for (const auto& j : corpus.journals) {
    json memberships = json::array();
    for (auto lib : j.memberships) memberships.push_back(to_string(lib));
    json item = {{"journal_id", j.journal_id},
                 {"title", j.title},
                 {"area", to_string(j.area)},
                 {"category", to_string(j.category)},
                 {"memberships", std::move(memberships)}};
    if (j.h_sc) item["h_sc"] = *j.h_sc;
    journals.push_back(std::move(item));
  }
  doc["journals"] = std::move(journals);

  json articles = json::array();
  for (const auto& a : corpus.articles) {
    articles.push_back({{"journal_id", a.journal_id},
                        {"line", a.line},
                        {"title", a.title},
                        {"year", a.year ? json(*a.year) : json(nullptr)},
                        {"cites", a.cites},
                        {"authors", a.authors},
                        {"publication", a.publication},
                        {"publisher", a.publisher},
                        {"url", a.url},
                        {"status", to_string(a.status)}});
  }
  doc["articles"] = std::move(articles);

  json totals = json::object();
  for (const auto& [id, n] : corpus.ibnp_totals) totals[id] = n;
  doc["ibnp_totals"] = std::move(totals);
  return doc;
}

std::string dump_corpus(const JournalCorpus& corpus) {
  return corpus_to_json(corpus).dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

namespace {

template <typename T, typename Parse>
T enum_field(const json& obj, const char* key, Parse parse) {
  const auto text = obj.at(key).get<std::string>();
  auto v = parse(text);
  if (!v) throw Error(Errc::InvalidCorpus, std::string("bad value for '") + key + "': " + text);
  return *v;
}

}  // namespace

JournalCorpus corpus_from_json(const json& doc) {
  try {
    JournalCorpus corpus;
    const auto& window = doc.at("window");
    corpus.window.start_year = window.at("start_year").get<int>();
    corpus.window.end_year = window.at("end_year").get<int>();

    for (const auto& item : doc.at("journals")) {
      JournalRecord j;
      j.journal_id = item.at("journal_id").get<std::string>();
      j.title = item.at("title").get<std::string>();
      j.area = enum_field<Area>(item, "area", parse_area);
      j.category = enum_field<IbnpCategory>(item, "category", parse_category);
      for (const auto& m : item.at("memberships")) {
        auto lib = parse_library(m.get<std::string>());
        if (!lib) throw Error(Errc::InvalidCorpus, "bad library '" + m.get<std::string>() + "'");
        j.memberships.insert(*lib);
      }
      if (item.contains("h_sc") && !item.at("h_sc").is_null())
        j.h_sc = item.at("h_sc").get<std::uint64_t>();
      corpus.journals.push_back(std::move(j));
    }

    for (const auto& item : doc.at("articles")) {
      ArticleRecord a;
      a.journal_id = item.at("journal_id").get<std::string>();
      a.line = item.value("line", std::size_t{0});
      a.title = item.at("title").get<std::string>();
      if (!item.at("year").is_null()) a.year = item.at("year").get<int>();
      const auto& cites = item.at("cites");
      if (!cites.is_number_unsigned())
        throw Error(Errc::InvalidCorpus, "cites must be a non-negative integer");
      a.cites = cites.get<std::uint64_t>();
      a.authors = item.value("authors", "");
      a.publication = item.value("publication", "");
      a.publisher = item.value("publisher", "");
      a.url = item.value("url", "");
      a.status = enum_field<ArticleStatus>(item, "status", parse_status);
      corpus.articles.push_back(std::move(a));
    }

    for (const auto& [id, n] : doc.at("ibnp_totals").items()) {
      if (!n.is_number_unsigned())
        throw Error(Errc::InvalidCorpus, "ibnp_totals['" + id + "'] must be a non-negative integer");
      corpus.ibnp_totals.emplace(id, n.get<std::uint64_t>());
    }
    return corpus;
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidCorpus, std::string("corpus JSON: ") + e.what());
  }
}

JournalCorpus load_corpus(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::InvalidCorpus, std::string("corpus JSON: ") + e.what());
  }
  return corpus_from_json(doc);
}

}  // namespace citemetric
