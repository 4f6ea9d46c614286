#include "kprime/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kprime/errors.hpp"

namespace kprime {

  namespace {

    using nlohmann::json;

    struct Line {
      std::size_t              number;
      std::vector<std::string> tokens;
    };

    // Non-empty lines with comments stripped.
    std::vector<Line> tokenize(std::string_view text) {
      std::vector<Line> out;
      std::size_t       number = 0;
      std::size_t       pos    = 0;
      while (pos <= text.size()) {
        auto const end = std::min(text.find('\n', pos), text.size());
        auto       raw = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
          raw = raw.substr(0, hash);
        }
        std::istringstream       is{std::string(raw)};
        std::vector<std::string> tokens;
        for (std::string t; is >> t;) {
          tokens.push_back(std::move(t));
        }
        if (!tokens.empty()) {
          out.push_back({number, std::move(tokens)});
        }
        if (end == text.size()) {
          break;
        }
      }
      return out;
    }

    std::size_t parse_index(std::string const& token, std::size_t line) {
      std::size_t value = 0;
      auto const* first = token.data();
      auto const* last  = token.data() + token.size();
      auto const [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr != last) {
        throw ParseError(line, "expected a non-negative integer, got '" + token + "'");
      }
      return value;
    }

    Line const& header(std::vector<Line> const& lines, char const* keyword) {
      if (lines.empty()) {
        throw ParseError(1, std::string("empty input, expected '") + keyword + "' header");
      }
      auto const& h = lines.front();
      if (h.tokens.front() != keyword) {
        throw ParseError(h.number, std::string("expected '") + keyword + "' header, got '"
                                       + h.tokens.front() + "'");
      }
      return h;
    }

    // `count` rows of `width` indices, each below `limit`, following the header.
    std::vector<std::vector<std::size_t>> read_rows(std::vector<Line> const& lines,
                                                    std::size_t count, std::size_t width,
                                                    std::size_t limit) {
      if (lines.size() != count + 1) {
        auto const at = lines.size() > count + 1 ? lines[count + 1].number : lines.back().number;
        throw ParseError(at, "expected " + std::to_string(count) + " table rows, found "
                                 + std::to_string(lines.size() - 1));
      }
      std::vector<std::vector<std::size_t>> rows;
      for (std::size_t r = 0; r < count; ++r) {
        auto const& line = lines[r + 1];
        if (line.tokens.size() != width) {
          throw ParseError(line.number, "expected " + std::to_string(width) + " entries, found "
                                            + std::to_string(line.tokens.size()));
        }
        std::vector<std::size_t> row;
        for (auto const& t : line.tokens) {
          auto const v = parse_index(t, line.number);
          if (v >= limit) {
            throw ParseError(line.number, "entry " + t + " is out of range");
          }
          row.push_back(v);
        }
        rows.push_back(std::move(row));
      }
      return rows;
    }

    void check_name(std::string const& name) {
      if (name.empty() || name.find_first_of(" \t\r\n#") != std::string::npos) {
        throw Error("name '" + name + "' is not a single token");
      }
    }

    template <class F>
    auto at_header(std::size_t line, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(line, e.what());
      }
    }

    template <class T>
    std::string join(std::vector<T> const& v, std::size_t begin, std::size_t end) {
      std::string s;
      for (std::size_t i = begin; i < end; ++i) {
        if (i > begin) {
          s += ' ';
        }
        s += std::to_string(v[i]);
      }
      return s;
    }

    json parse_json(std::string_view text) {
      try {
        return json::parse(text);
      } catch (json::parse_error const& e) {
        // nlohmann reports a byte offset; convert it to a line.
        std::size_t const byte = std::min<std::size_t>(e.byte, text.size());
        std::size_t       line = 1;
        for (std::size_t i = 0; i + 1 < byte; ++i) {
          line += text[i] == '\n' ? 1 : 0;
        }
        throw ParseError(line, e.what());
      }
    }

    template <class T>
    T field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(1, std::string("missing field '") + key + "'");
      }
      try {
        return j.at(key).get<T>();
      } catch (json::exception const& e) {
        throw ParseError(1, std::string("field '") + key + "': " + e.what());
      }
    }

    std::vector<Elem> flatten(std::vector<std::vector<std::size_t>> const& rows) {
      std::vector<Elem> flat;
      for (auto const& r : rows) {
        for (auto v : r) {
          flat.push_back(static_cast<Elem>(v));
        }
      }
      return flat;
    }

    std::vector<std::vector<std::size_t>> json_rows(json const& j, char const* key, std::size_t count,
                                                    std::size_t width) {
      auto rows = field<std::vector<std::vector<std::size_t>>>(j, key);
      if (rows.size() != count) {
        throw ParseError(1, std::string("field '") + key + "' needs " + std::to_string(count) + " rows");
      }
      for (auto const& r : rows) {
        if (r.size() != width) {
          throw ParseError(1, std::string("field '") + key + "' needs rows of length "
                                  + std::to_string(width));
        }
      }
      return rows;
    }

  }  // namespace

  char const* to_string(FileKind k) {
    switch (k) {
      case FileKind::monoid:
        return "monoid";
      case FileKind::group:
        return "group";
      case FileKind::aset:
        return "aset";
      case FileKind::nset:
        return "nset";
    }
    return "?";
  }

  FileKind detect_kind(std::string_view text) {
    auto const lines = tokenize(text);
    if (lines.empty()) {
      throw ParseError(1, "empty input");
    }
    auto const& t = lines.front().tokens.front();
    for (auto k : {FileKind::monoid, FileKind::group, FileKind::aset, FileKind::nset}) {
      if (t == to_string(k)) {
        return k;
      }
    }
    throw ParseError(lines.front().number, "unknown header '" + t + "'");
  }

  ////////////////////////////////////////////////////////////////////////
  // Monoids and groups
  ////////////////////////////////////////////////////////////////////////

  FiniteMonoid parse_monoid(std::string_view text) {
    auto const  lines = tokenize(text);
    auto const& h     = header(lines, "monoid");
    if (h.tokens.size() != 3) {
      throw ParseError(h.number, "expected 'monoid <name> <n>'");
    }
    auto const n = parse_index(h.tokens[2], h.number);
    if (n == 0) {
      throw ParseError(h.number, "a monoid has at least one element");
    }
    auto const rows = read_rows(lines, n, n, n);
    return at_header(h.number, [&] { return FiniteMonoid::from_table(h.tokens[1], n, flatten(rows)); });
  }

  std::string write_monoid(FiniteMonoid const& m) {
    check_name(m.name());
    std::string out = "monoid " + m.name() + " " + std::to_string(m.size()) + "\n";
    for (std::size_t r = 0; r < m.size(); ++r) {
      out += join(m.table(), r * m.size(), (r + 1) * m.size()) + "\n";
    }
    return out;
  }

  FiniteGroup parse_group(std::string_view text) {
    auto const  lines = tokenize(text);
    auto const& h     = header(lines, "group");
    if (h.tokens.size() != 3) {
      throw ParseError(h.number, "expected 'group <name> <n>'");
    }
    auto const n = parse_index(h.tokens[2], h.number);
    if (n == 0) {
      throw ParseError(h.number, "a group has at least one element");
    }
    auto const rows = read_rows(lines, n, n, n);
    return at_header(h.number, [&] { return FiniteGroup::from_table(h.tokens[1], rows); });
  }

  std::string write_group(FiniteGroup const& g) {
    check_name(g.name());
    std::string out = "group " + g.name() + " " + std::to_string(g.size()) + "\n";
    for (std::size_t r = 0; r < g.size(); ++r) {
      out += join(g.table(), r * g.size(), (r + 1) * g.size()) + "\n";
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // A-sets
  ////////////////////////////////////////////////////////////////////////

  FiniteASet parse_aset(std::string_view text, MonoidPtr const& monoid) {
    auto const  lines = tokenize(text);
    auto const& h     = header(lines, "aset");
    if (h.tokens.size() != 5 || h.tokens[2] != "over") {
      throw ParseError(h.number, "expected 'aset <name> over <monoid> <m>'");
    }
    if (h.tokens[3] != monoid->name()) {
      throw ParseError(h.number, "declared over '" + h.tokens[3] + "' but the monoid is '"
                                     + monoid->name() + "'");
    }
    auto const m = parse_index(h.tokens[4], h.number);
    if (m == 0) {
      throw ParseError(h.number, "an A-set has at least its base point");
    }
    auto const rows = read_rows(lines, monoid->size(), m, m);
    return at_header(h.number,
                     [&] { return FiniteASet::from_table(monoid, h.tokens[1], m, flatten(rows)); });
  }

  std::string write_aset(FiniteASet const& x) {
    check_name(x.name());
    check_name(x.monoid()->name());
    std::string out = "aset " + x.name() + " over " + x.monoid()->name() + " "
                      + std::to_string(x.size()) + "\n";
    for (std::size_t a = 0; a < x.monoid()->size(); ++a) {
      out += join(x.table(), a * x.size(), (a + 1) * x.size()) + "\n";
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // N-sets
  ////////////////////////////////////////////////////////////////////////

  FgNSet parse_nset(std::string_view text) {
    auto const  lines = tokenize(text);
    auto const& h     = header(lines, "nset");
    if (h.tokens.size() != 3) {
      throw ParseError(h.number, "expected 'nset <name> <n>'");
    }
    auto const n = parse_index(h.tokens[2], h.number);
    if (n == 0) {
      throw ParseError(h.number, "an N-set has at least its base point");
    }
    if (lines.size() < 2 || lines[1].tokens.front() != "succ:") {
      throw ParseError(lines.size() < 2 ? h.number : lines[1].number, "expected a 'succ:' line");
    }
    auto const& sl = lines[1];
    if (sl.tokens.size() != n + 1) {
      throw ParseError(sl.number, "expected " + std::to_string(n) + " successors, found "
                                      + std::to_string(sl.tokens.size() - 1));
    }
    std::vector<Elem> succ;
    std::vector<Elem> marked;
    for (std::size_t i = 1; i <= n; ++i) {
      auto const& t = sl.tokens[i];
      if (t == "-") {
        succ.push_back(kTail);
        marked.push_back(static_cast<Elem>(i - 1));
        continue;
      }
      auto const v = parse_index(t, sl.number);
      if (v >= n) {
        throw ParseError(sl.number, "successor " + t + " is out of range");
      }
      succ.push_back(static_cast<Elem>(v));
    }
    std::vector<Elem> listed;
    if (lines.size() >= 3) {
      auto const& tl = lines[2];
      if (tl.tokens.front() != "tails:") {
        throw ParseError(tl.number, "expected a 'tails:' line");
      }
      for (std::size_t i = 1; i < tl.tokens.size(); ++i) {
        listed.push_back(static_cast<Elem>(parse_index(tl.tokens[i], tl.number)));
      }
      if (listed != marked) {
        throw ParseError(tl.number, "tails do not match the '-' entries of succ:");
      }
      if (lines.size() > 3) {
        throw ParseError(lines[3].number, "unexpected trailing content");
      }
    } else if (!marked.empty()) {
      throw ParseError(sl.number, "succ: marks tail-roots but there is no 'tails:' line");
    }
    return at_header(h.number, [&] { return FgNSet::make(h.tokens[1], succ); });
  }

  std::string write_nset(FgNSet const& x) {
    check_name(x.name());
    std::string out = "nset " + x.name() + " " + std::to_string(x.size()) + "\nsucc:";
    for (auto s : x.succ_map()) {
      out += s == kTail ? std::string(" -") : " " + std::to_string(s);
    }
    out += "\n";
    auto const roots = x.roots();
    if (!roots.empty()) {
      out += "tails: " + join(roots, 0, roots.size()) + "\n";
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  namespace {

    json table_rows(std::vector<Elem> const& t, std::size_t rows, std::size_t width) {
      json out = json::array();
      for (std::size_t r = 0; r < rows; ++r) {
        out.push_back(std::vector<Elem>(t.begin() + static_cast<std::ptrdiff_t>(r * width),
                                        t.begin() + static_cast<std::ptrdiff_t>((r + 1) * width)));
      }
      return out;
    }

  }  // namespace

  std::string monoid_to_json(FiniteMonoid const& m) {
    json j{{"name", m.name()}, {"n", m.size()}, {"mul", table_rows(m.table(), m.size(), m.size())}};
    return j.dump() + "\n";
  }

  FiniteMonoid monoid_from_json(std::string_view text) {
    auto const j    = parse_json(text);
    auto const n    = field<std::size_t>(j, "n");
    auto const rows = json_rows(j, "mul", n, n);
    return at_header(1, [&] {
      return FiniteMonoid::from_table(field<std::string>(j, "name"), n, flatten(rows));
    });
  }

  std::string group_to_json(FiniteGroup const& g) {
    std::vector<Elem> t(g.table().begin(), g.table().end());
    json j{{"name", g.name()}, {"n", g.size()}, {"mul", table_rows(t, g.size(), g.size())}};
    return j.dump() + "\n";
  }

  FiniteGroup group_from_json(std::string_view text) {
    auto const j    = parse_json(text);
    auto const n    = field<std::size_t>(j, "n");
    auto const rows = json_rows(j, "mul", n, n);
    return at_header(1, [&] { return FiniteGroup::from_table(field<std::string>(j, "name"), rows); });
  }

  std::string aset_to_json(FiniteASet const& x) {
    json j{{"name", x.name()},
           {"monoid", x.monoid()->name()},
           {"m", x.size()},
           {"act", table_rows(x.table(), x.monoid()->size(), x.size())}};
    return j.dump() + "\n";
  }

  FiniteASet aset_from_json(std::string_view text, MonoidPtr const& monoid) {
    auto const j = parse_json(text);
    if (field<std::string>(j, "monoid") != monoid->name()) {
      throw ParseError(1, "A-set is declared over a different monoid");
    }
    auto const m    = field<std::size_t>(j, "m");
    auto const rows = json_rows(j, "act", monoid->size(), m);
    return at_header(1, [&] {
      return FiniteASet::from_table(monoid, field<std::string>(j, "name"), m, flatten(rows));
    });
  }

  std::string nset_to_json(FgNSet const& x) {
    json succ = json::array();
    for (auto s : x.succ_map()) {
      succ.push_back(s == kTail ? json(nullptr) : json(s));
    }
    json j{{"name", x.name()}, {"n", x.size()}, {"succ", succ}, {"tails", x.roots()}};
    return j.dump() + "\n";
  }

  FgNSet nset_from_json(std::string_view text) {
    auto const j    = parse_json(text);
    auto const n    = field<std::size_t>(j, "n");
    auto const raw  = field<std::vector<json>>(j, "succ");
    if (raw.size() != n) {
      throw ParseError(1, "field 'succ' needs " + std::to_string(n) + " entries");
    }
    std::vector<Elem> succ;
    std::vector<Elem> marked;
    for (std::size_t i = 0; i < n; ++i) {
      if (raw[i].is_null()) {
        succ.push_back(kTail);
        marked.push_back(static_cast<Elem>(i));
      } else if (raw[i].is_number_unsigned() && raw[i].get<std::size_t>() < n) {
        succ.push_back(raw[i].get<Elem>());
      } else {
        throw ParseError(1, "successor of " + std::to_string(i) + " is not a point");
      }
    }
    if (j.contains("tails") && field<std::vector<Elem>>(j, "tails") != marked) {
      throw ParseError(1, "tails do not match the null successors");
    }
    return at_header(1, [&] { return FgNSet::make(field<std::string>(j, "name"), succ); });
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot read " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

}  // namespace kprime
