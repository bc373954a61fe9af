#include "negord/table.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "negord/typos.hpp"

namespace negord {

std::optional<Format> parse_format(std::string_view text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  if (text == "latex") return Format::latex;
  if (text == "text") return Format::text;
  return std::nullopt;
}

namespace {

long parse_index(std::string_view s) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("bad index '" + std::string(s) + "'");
  }
  if (v < 0) throw std::invalid_argument("indices must be nonnegative");
  return v;
}

}  // namespace

Range parse_range(std::string_view text) {
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_index(text);
  } else {
    r.lo = parse_index(text.substr(0, dots));
    r.hi = parse_index(text.substr(dots + 2));
  }
  if (r.hi < r.lo) throw std::invalid_argument("empty range '" + std::string(text) + "'");
  return r;
}

Lambda parse_lambda(std::string_view text) {
  if (text == "symbolic") return Symbolic{};
  return Rational::parse(text);
}

std::string lambda_label(const Lambda& lambda) {
  if (std::holds_alternative<Symbolic>(lambda)) return "symbolic";
  return std::get<Rational>(lambda).str();
}

Table build_table(const TableSpec& spec) {
  const FamilyInfo& info = family_info(spec.family);
  Table t;
  t.family = info.tag;
  t.lambda = info.uses_lambda ? lambda_label(spec.lambda) : "-";
  t.has_k = info.uses_k;
  for (long n = spec.n.lo; n <= spec.n.hi; ++n) t.ns.push_back(n);
  if (info.uses_k) {
    for (long k = spec.k.lo; k <= spec.k.hi; ++k) t.ks.push_back(k);
  } else {
    t.ks.push_back(0);
  }
  for (long n : t.ns) {
    std::vector<Value> row;
    row.reserve(t.ks.size());
    for (long k : t.ks) row.push_back(evaluate(info.tag, n, k, spec.x, spec.lambda, spec.method));
    t.cells.push_back(std::move(row));
  }
  return t;
}

std::string latex_value(const Value& v) {
  auto rat = [](const Rational& q) {
    const Rational mag = q.sign() < 0 ? -q : q;
    std::string body = mag.is_integer() ? mag.numerator().get_str()
                                        : "\\frac{" + mag.numerator().get_str() + "}{" +
                                              mag.denominator().get_str() + "}";
    return (q.sign() < 0 ? "-" : "") + body;
  };
  if (const auto* q = std::get_if<Rational>(&v)) return rat(*q);
  const Laurent& p = std::get<Laurent>(v);
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? "-" : "+";
    }
    first = false;
    if (e == 0) {
      out += rat(mag);
      continue;
    }
    if (mag != Rational(1)) out += rat(mag);
    out += "\\lambda ";
    if (e != 1) out += "^{" + std::to_string(e) + "}";
  }
  return out;
}

namespace {

std::string cell_text(const Value& v) {
  if (const auto* p = std::get_if<Laurent>(&v)) return p->pretty();
  return value_str(v);
}

const KnownTypo* typo_for(const Table& t, std::size_t r, std::size_t c) {
  return find_typo(t.family, t.lambda, t.ns[r], t.ks[c]);
}

std::string corner(const Table& t) { return t.has_k ? "n\\k" : "n"; }

std::string col_label(const Table& t, std::size_t c) { return t.has_k ? std::to_string(t.ks[c]) : "value"; }

std::string render_csv(const Table& t, bool annotate) {
  CsvRows rows;
  std::vector<std::string> head{corner(t)};
  for (std::size_t c = 0; c < t.ks.size(); ++c) head.push_back(col_label(t, c));
  rows.push_back(std::move(head));
  for (std::size_t r = 0; r < t.ns.size(); ++r) {
    std::vector<std::string> line{std::to_string(t.ns[r])};
    for (std::size_t c = 0; c < t.ks.size(); ++c) {
      std::string cell = value_str(t.cells[r][c]);
      if (annotate) {
        if (const auto* ty = typo_for(t, r, c)) cell += " [printed: " + ty->printed + "]";
      }
      line.push_back(std::move(cell));
    }
    rows.push_back(std::move(line));
  }
  return emit_csv(rows);
}

std::string render_json(const Table& t, bool annotate) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["family"] = t.family;
  j["lambda"] = t.lambda;
  if (t.has_k) j["k"] = t.ks;
  ordered_json rows = ordered_json::array();
  ordered_json notes = ordered_json::array();
  for (std::size_t r = 0; r < t.ns.size(); ++r) {
    ordered_json vals = ordered_json::array();
    for (std::size_t c = 0; c < t.ks.size(); ++c) {
      const Value& v = t.cells[r][c];
      if (const auto* p = std::get_if<Laurent>(&v)) {
        vals.push_back(ordered_json::parse(p->to_json()));
      } else {
        vals.push_back(value_str(v));
      }
      if (annotate) {
        if (const auto* ty = typo_for(t, r, c)) {
          notes.push_back({{"n", t.ns[r]}, {"k", t.ks[c]}, {"printed", ty->printed}, {"reason", ty->reason}});
        }
      }
    }
    rows.push_back({{"n", t.ns[r]}, {"values", std::move(vals)}});
  }
  j["rows"] = std::move(rows);
  if (annotate) j["known_typos"] = std::move(notes);
  return j.dump(2) + "\n";
}

std::string render_latex(const Table& t, bool annotate) {
  std::ostringstream os;
  os << "\\begin{tabular}{" << std::string(t.ks.size() + 1, 'l') << "}\n";
  os << "$" << (t.has_k ? "n\\backslash k" : "n") << "$";
  for (std::size_t c = 0; c < t.ks.size(); ++c) os << " & $" << col_label(t, c) << "$";
  os << " \\\\\n";
  std::vector<std::string> comments;
  for (std::size_t r = 0; r < t.ns.size(); ++r) {
    os << "$" << t.ns[r] << "$";
    for (std::size_t c = 0; c < t.ks.size(); ++c) {
      os << " & $" << latex_value(t.cells[r][c]);
      if (annotate) {
        if (const auto* ty = typo_for(t, r, c)) {
          os << "{}^{\\ast}";
          comments.push_back("% (" + std::to_string(t.ns[r]) + "," + std::to_string(t.ks[c]) +
                             ") printed: " + ty->printed);
        }
      }
      os << "$";
    }
    os << " \\\\\n";
  }
  os << "\\end{tabular}\n";
  for (const auto& c : comments) os << c << "\n";
  return os.str();
}

std::string render_text(const Table& t, bool annotate) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{corner(t)};
  for (std::size_t c = 0; c < t.ks.size(); ++c) head.push_back(col_label(t, c));
  grid.push_back(std::move(head));
  for (std::size_t r = 0; r < t.ns.size(); ++r) {
    std::vector<std::string> line{std::to_string(t.ns[r])};
    for (std::size_t c = 0; c < t.ks.size(); ++c) {
      std::string cell = cell_text(t.cells[r][c]);
      if (annotate) {
        if (const auto* ty = typo_for(t, r, c)) cell += " [printed: " + ty->printed + "]";
      }
      line.push_back(std::move(cell));
    }
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width(grid.front().size(), 0);
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  std::ostringstream os;
  for (const auto& line : grid) {
    std::string s;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) s += "  ";
      s += line[c];
      if (c + 1 < line.size()) s += std::string(width[c] - line[c].size(), ' ');
    }
    os << s << "\n";
  }
  return os.str();
}

}  // namespace

std::string render(const Table& table, Format format, bool annotate) {
  switch (format) {
    case Format::csv:
      return render_csv(table, annotate);
    case Format::json:
      return render_json(table, annotate);
    case Format::latex:
      return render_latex(table, annotate);
    case Format::text:
      return render_text(table, annotate);
  }
  return {};
}

namespace {

bool needs_quotes(const std::string& f) {
  return f.find_first_of(",\"\n\r") != std::string::npos;
}

}  // namespace

std::string emit_csv(const CsvRows& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      const std::string& f = row[i];
      if (!needs_quotes(f)) {
        out += f;
        continue;
      }
      out += '"';
      for (char ch : f) {
        if (ch == '"') out += '"';
        out += ch;
      }
      out += '"';
    }
    out += '\n';
  }
  return out;
}

CsvRows parse_csv(std::string_view text) {
  CsvRows rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;  // something seen on the current record
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    switch (ch) {
      case '"':
        if (!field.empty()) throw std::invalid_argument("stray quote in CSV field");
        quoted = true;
        any = true;
        break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        any = true;
        break;
      case '\n':
        row.push_back(std::move(field));
        field.clear();
        rows.push_back(std::move(row));
        row.clear();
        any = false;
        break;
      default:
        field += ch;
        any = true;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace negord
