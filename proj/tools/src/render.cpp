#include "abpscli/render.hpp"

#include <regex>
#include <utility>

#include "abps/error.hpp"

namespace abps::cli {

void Table::add(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match the columns of " + name);
  rows.push_back(std::move(row));
}

Json table_json(const Table& t) {
  Json j;
  j["name"] = t.name;
  j["title"] = t.title;
  j["columns"] = Json::array();
  for (const auto& c : t.columns) j["columns"].push_back(c.key);
  j["rows"] = Json::array();
  for (const auto& r : t.rows) {
    Json row = Json::object();
    for (std::size_t i = 0; i < r.size(); ++i) row[t.columns[i].key] = r[i];
    j["rows"].push_back(row);
  }
  return j;
}

Report single(const Table& t) { return {{t}, table_json(t)}; }

namespace {

std::string escape_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out.empty() ? " " : out;
}

}  // namespace

std::string render_markdown(const Table& t) {
  std::string out;
  if (!t.title.empty()) out += "### " + t.title + "\n\n";
  out += "|";
  for (const auto& c : t.columns) out += " " + escape_cell(c.header) + " |";
  out += "\n|";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += "---|";
  out += "\n";
  for (const auto& r : t.rows) {
    out += "|";
    for (const auto& cell : r) out += " " + escape_cell(cell) + " |";
    out += "\n";
  }
  return out;
}

std::string render_tsv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "\t" : "") + t.columns[i].key;
  out += "\n";
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "\t" : "") + r[i];
    out += "\n";
  }
  return out;
}

std::string render(const Report& r, Format f, bool uni) {
  if (f == Format::Json) return r.record.dump(2) + "\n";
  std::string out;
  for (std::size_t i = 0; i < r.tables.size(); ++i) {
    if (i) out += "\n";
    if (f == Format::Markdown) {
      out += render_markdown(r.tables[i]);
    } else {
      if (r.tables.size() > 1) out += "# " + r.tables[i].name + "\n";
      out += render_tsv(r.tables[i]);
    }
  }
  return uni && f == Format::Markdown ? unicode(out) : out;
}

std::string unicode(const std::string& ascii) {
  static const std::vector<std::pair<std::regex, std::string>> map = {
      {std::regex(R"(\(x\))"), "⊠"},
      {std::regex(R"(\\?\|x)"), "⋊"},
      {std::regex(R"(~=)"), "≃"},
      {std::regex(R"(\bzeta\b)"), "ζ"},
      {std::regex(R"(\bxi\b)"), "ξ"},
      {std::regex(R"(\bomega\b)"), "ω"},
      {std::regex(R"(Z/([0-9]+))"), "ℤ/$1"},
      {std::regex(R"(\bS([0-9]+)\b)"), "𝔖$1"},
      {std::regex(R"(\^-1(?![0-9]))"), "⁻¹"},
      {std::regex(R"(\^2(?![0-9]))"), "²"},
      {std::regex(R"(\^3(?![0-9]))"), "³"},
      {std::regex(R"(\^4(?![0-9]))"), "⁴"},
  };
  std::string s = ascii;
  for (const auto& [re, rep] : map) s = std::regex_replace(s, re, rep);
  return s;
}

}  // namespace abps::cli
