#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace abps::cli {

using Json = nlohmann::json;

enum class Format { Markdown, Json, Tsv };

struct Column {
  std::string key;     // JSON field name
  std::string header;  // markdown / tsv header
};

struct Table {
  std::string name;   // "table2"
  std::string title;  // one-line caption
  std::vector<Column> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row);
};

/// A command result: tables for md/tsv, a JSON record for json.
struct Report {
  std::vector<Table> tables;
  Json record;
};

/// {"columns": [...], "name": ..., "rows": [{key: value}], "title": ...}
Json table_json(const Table& t);
Report single(const Table& t);

std::string render_markdown(const Table& t);
std::string render_tsv(const Table& t);
std::string render(const Report& r, Format f, bool unicode = false);

/// Unicode typography over the ASCII canonical form ("zeta" -> ζ, "(x)" -> ⊠, ...).
std::string unicode(const std::string& ascii);

}  // namespace abps::cli
