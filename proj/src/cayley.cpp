#include "sgtop/corpus.hpp"

#include <algorithm>  // for find
#include <cctype>     // for isspace
#include <charconv>   // for from_chars
#include <fstream>    // for ifstream
#include <set>        // for set
#include <sstream>    // for ostringstream

#include "sgtop/builders.hpp"    // for build
#include "sgtop/predicates.hpp"  // for predicate_names

namespace sgtop {

  namespace {

    struct Token {
      std::string_view text;
      std::size_t      column;  // 1-based
    };

    struct Line {
      std::size_t        number;  // 1-based
      std::vector<Token> tokens;
    };

    std::vector<Line> tokenize(std::string_view text) {
      std::vector<Line> out;
      std::size_t       number = 0;
      while (!text.empty() || number == 0) {
        ++number;
        std::size_t const end  = text.find('\n');
        std::string_view  line = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
          line = line.substr(0, hash);
        }
        Line l{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
          while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
          }
          std::size_t const start = i;
          while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
          }
          if (i > start) {
            l.tokens.push_back({line.substr(start, i - start), start + 1});
          }
        }
        if (!l.tokens.empty()) {
          out.push_back(std::move(l));
        }
        if (text.empty()) {
          break;
        }
      }
      return out;
    }

    std::size_t number_of(Token const& t, std::size_t line) {
      std::size_t value = 0;
      auto const [ptr, ec]
          = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
      if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        throw ParseError(line, t.column,
                         "expected a non-negative integer, got \""
                             + std::string(t.text) + "\"");
      }
      return value;
    }

  }  // namespace

  FiniteSemigroup parse_cayley(std::string_view text) {
    auto const lines = tokenize(text);
    if (lines.empty()) {
      throw ParseError(1, 1, "expected the order on the first line");
    }
    Line const& head = lines[0];
    if (head.tokens.size() != 1) {
      throw ParseError(head.number, head.tokens[1].column,
                       "expected only the order on this line");
    }
    std::size_t const n = number_of(head.tokens[0], head.number);
    if (n == 0) {
      throw ParseError(head.number, head.tokens[0].column, "the order must be positive");
    }
    if (lines.size() < 2) {
      throw ParseError(head.number + 1, 1, "expected a line of labels");
    }
    Line const& names = lines[1];
    if (names.tokens.size() != n) {
      std::size_t const col = names.tokens.size() > n
                                  ? names.tokens[n].column
                                  : names.tokens.back().column
                                        + names.tokens.back().text.size();
      throw ParseError(names.number, col,
                       "expected " + std::to_string(n) + " labels, got "
                           + std::to_string(names.tokens.size()));
    }
    std::vector<std::string> labels;
    std::set<std::string_view> seen;
    for (auto const& t : names.tokens) {
      if (!seen.insert(t.text).second) {
        throw ParseError(names.number, t.column,
                         "repeated label \"" + std::string(t.text) + "\"");
      }
      labels.emplace_back(t.text);
    }
    FiniteSemigroup::Table table;
    for (std::size_t r = 0; r < n; ++r) {
      if (2 + r >= lines.size()) {
        std::size_t const at = lines.back().number + 1;
        throw ParseError(at, 1, "expected row " + std::to_string(r) + " of the table");
      }
      Line const& row = lines[2 + r];
      if (row.tokens.size() != n) {
        std::size_t const col = row.tokens.size() > n
                                    ? row.tokens[n].column
                                    : row.tokens.back().column
                                          + row.tokens.back().text.size();
        throw ParseError(row.number, col,
                         "row " + std::to_string(r) + " has "
                             + std::to_string(row.tokens.size())
                             + " entries, expected " + std::to_string(n));
      }
      std::vector<std::size_t> entries;
      for (auto const& t : row.tokens) {
        std::size_t const v = number_of(t, row.number);
        if (v >= n) {
          throw ParseError(row.number, t.column,
                           "entry " + std::to_string(v) + " is not below "
                               + std::to_string(n));
        }
        entries.push_back(v);
      }
      table.push_back(std::move(entries));
    }
    if (lines.size() > 2 + n) {
      Line const& extra = lines[2 + n];
      throw ParseError(extra.number, extra.tokens[0].column,
                       "unexpected content after the table");
    }
    return FiniteSemigroup::build(table, labels);
  }

  FiniteSemigroup read_cayley(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw IoError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_cayley(ss.str());
  }

  std::string format_cayley(FiniteSemigroup const& s) {
    std::ostringstream out;
    out << s.size() << '\n';
    for (Element x = 0; x < s.size(); ++x) {
      out << (x ? " " : "") << s.label(x);
    }
    out << '\n';
    for (Element x = 0; x < s.size(); ++x) {
      for (Element y = 0; y < s.size(); ++y) {
        out << (y ? " " : "") << s.product(x, y);
      }
      out << '\n';
    }
    return out.str();
  }

  std::string_view to_string(EntrySource s) {
    switch (s) {
      case EntrySource::file: return "file";
      case EntrySource::builder: return "builder";
      default: return "enumerator";
    }
  }

  EntrySource entry_source_from_string(std::string_view s) {
    if (s == "file") {
      return EntrySource::file;
    }
    if (s == "builder") {
      return EntrySource::builder;
    }
    if (s == "enumerator") {
      return EntrySource::enumerator;
    }
    throw BadParameter("unknown entry source \"" + std::string(s) + "\"");
  }

  CorpusEntry entry_from_file(std::string const& path) {
    return {path, EntrySource::file, Semigroup(read_cayley(path), path), {"finite"}};
  }

  CorpusEntry entry_from_builder(std::string const& spec) {
    Semigroup s = build(spec);
    std::vector<std::string> tags{s.is_finite() ? "finite" : "stream"};
    return {spec, EntrySource::builder, std::move(s), std::move(tags)};
  }

  CorpusEntry entry_from_enumeration(FiniteSemigroup s, std::size_t index) {
    std::string id = "enum:" + std::to_string(s.size()) + ":" + std::to_string(index);
    return {id, EntrySource::enumerator, Semigroup(std::move(s), id), {"finite"}};
  }

  void validate_corpus(std::vector<CorpusEntry> const& entries) {
    std::set<std::string_view> ids;
    auto const&                names = predicate_names();
    for (auto const& e : entries) {
      if (!ids.insert(e.id).second) {
        throw BadParameter("repeated corpus id \"" + e.id + "\"");
      }
      for (auto const& [key, value] : e.facts()) {
        std::string_view k = key;
        if (k.substr(0, 7) == "center.") {
          k.remove_prefix(7);
        }
        if (std::find(names.begin(), names.end(), k) == names.end()) {
          throw BadParameter("entry \"" + e.id + "\" declares the unknown fact \""
                             + key + "\"");
        }
      }
    }
  }

}  // namespace sgtop
