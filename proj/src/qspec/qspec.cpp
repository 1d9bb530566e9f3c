#include "qtilt/qspec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace qtilt {

// --- quiver / path helpers --------------------------------------------------

int Quiver::find(std::string_view label) const {
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i].label == label) return static_cast<int>(i);
  }
  return -1;
}

bool Quiver::connected() const {
  if (vertices == 0) return false;
  std::vector<uint32_t> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0u);
  auto root = [&](uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Arrow& a : arrows) parent[root(a.source)] = root(a.target);
  for (uint32_t v = 1; v < vertices; ++v) {
    if (root(v) != root(0)) return false;
  }
  return true;
}

Quiver Quiver::opposite() const {
  Quiver q = *this;
  for (Arrow& a : q.arrows) std::swap(a.source, a.target);
  return q;
}

bool DegLex::operator()(const Path& a, const Path& b) const {
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  return a.source < b.source;
}

Path concat(const Path& a, const Path& b) {
  if (a.target != b.source) throw std::invalid_argument("concat: paths are not composable");
  Path out{a.source, b.target, a.arrows};
  out.arrows.insert(out.arrows.end(), b.arrows.begin(), b.arrows.end());
  return out;
}

Path reversed(const Path& p) {
  Path out{p.target, p.source, p.arrows};
  std::reverse(out.arrows.begin(), out.arrows.end());
  return out;
}

std::string to_string(const Path& p, const Quiver& q) {
  if (p.arrows.empty()) return "e_" + std::to_string(p.source + 1);
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += '*';
    out += q.arrows.at(p.arrows[i]).label;
  }
  return out;
}

void PathExpr::canonicalize(const Field& f) {
  std::map<Path, uint32_t, DegLex> acc;
  for (auto& [c, p] : terms) {
    uint32_t& slot = acc[p];
    slot = f.add(slot, c % f.characteristic());
  }
  terms.clear();
  for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
    if (it->second) terms.emplace_back(it->second, it->first);
  }
}

std::string to_string(const PathExpr& e, const Quiver& q) {
  if (e.terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    if (i) out += " + ";
    if (e.terms[i].first != 1) out += std::to_string(e.terms[i].first) + "*";
    out += to_string(e.terms[i].second, q);
  }
  return out;
}

// --- errors -----------------------------------------------------------------

namespace {

std::string located(std::size_t line, std::size_t column, const std::string& message) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(located(line, column, message)), line_(line), column_(column), message_(message) {}

// --- expression parser ------------------------------------------------------

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_idempotent_token(std::string_view s) {
  if (s.size() < 3 || s.substr(0, 2) != "e_") return false;
  return std::all_of(s.begin() + 2, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Signed integer coefficients are kept unreduced until the expression is done.
using Terms = std::vector<std::pair<int64_t, Path>>;

class ExprParser {
 public:
  ExprParser(std::string_view text, const Quiver& q, std::size_t line, std::size_t column0)
      : text_(text), q_(q), line_(line), col0_(column0) {}

  Terms parse_all() {
    Terms t = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

  std::size_t column() const { return col0_ + pos_; }

 private:
  [[noreturn]] void fail(const std::string& msg, std::optional<std::size_t> at = std::nullopt) const {
    throw ParseError(line_, col0_ + at.value_or(pos_), msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc()) fail("integer out of range", start);
    return v;
  }

  Terms expr() {
    Terms out;
    int64_t sign = 1;
    if (peek('-')) {
      ++pos_;
      sign = -1;
    } else if (peek('+')) {
      ++pos_;
    }
    append(out, term(), sign);
    while (true) {
      if (peek('+')) {
        ++pos_;
        append(out, term(), 1);
      } else if (peek('-')) {
        ++pos_;
        append(out, term(), -1);
      } else {
        break;
      }
    }
    return out;
  }

  static void append(Terms& out, const Terms& add, int64_t sign) {
    for (const auto& [c, p] : add) out.emplace_back(sign * c, p);
  }

  Terms term() {
    skip_ws();
    int64_t coeff = 1;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      coeff = integer();
      if (!peek('*')) {
        if (coeff != 0) fail("a scalar must multiply a path", start);
        return {};
      }
      ++pos_;
    }
    Terms acc = factor();
    while (peek('*')) {
      ++pos_;
      const std::size_t at = pos_;
      acc = multiply(acc, factor(), at);
    }
    for (auto& t : acc) t.first *= coeff;
    return acc;
  }

  Terms multiply(const Terms& a, const Terms& b, std::size_t at) const {
    Terms out;
    for (const auto& [ca, pa] : a) {
      for (const auto& [cb, pb] : b) {
        if (pa.target != pb.source) {
          fail("non-composable product: " + to_string(pa, q_) + " ends at vertex " +
                   std::to_string(pa.target + 1) + " but " + to_string(pb, q_) + " starts at vertex " +
                   std::to_string(pb.source + 1),
               at);
        }
        out.emplace_back(ca * cb, concat(pa, pb));
      }
    }
    return out;
  }

  Terms factor() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    if (text_[pos_] == '(') {
      ++pos_;
      Terms inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      if (!peek('^')) return inner;
      ++pos_;
      const std::size_t exp_at = pos_;
      int64_t k = integer();
      if (k < 1) fail("exponent must be at least 1", exp_at);
      Terms out = inner;
      for (int64_t i = 1; i < k; ++i) out = multiply(out, inner, start);
      return out;
    }
    if (!is_ident_start(text_[pos_])) fail("expected an arrow label, e_<i> or '('");
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    const std::string_view tok = text_.substr(start, pos_ - start);
    if (is_idempotent_token(tok)) {
      int64_t v = 0;
      std::from_chars(tok.data() + 2, tok.data() + tok.size(), v);
      if (v < 1 || v > static_cast<int64_t>(q_.vertices)) {
        fail("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(q_.vertices), start);
      }
      return {{1, Path::vertex(static_cast<uint32_t>(v - 1))}};
    }
    const int a = q_.find(tok);
    if (a < 0) fail("unknown arrow label '" + std::string(tok) + "'", start);
    const Arrow& arrow = q_.arrows[a];
    return {{1, Path{arrow.source, arrow.target, {static_cast<uint16_t>(a)}}}};
  }

  std::string_view text_;
  const Quiver& q_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

PathExpr finish(const Terms& t, const Field& f) {
  PathExpr e;
  for (const auto& [c, p] : t) e.terms.emplace_back(f.reduce(c), p);
  e.canonicalize(f);
  return e;
}

PathExpr parse_expr_at(std::string_view text, const Quiver& q, const Field& f, std::size_t line,
                       std::size_t col0) {
  ExprParser parser(text, q, line, col0);
  return finish(parser.parse_all(), f);
}

// --- line-level parser ------------------------------------------------------

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_ws(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

int64_t parse_int_token(const Token& t, std::size_t line, const char* what) {
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
    throw ParseError(line, t.column, std::string("expected ") + what + ", got '" + std::string(t.text) + "'");
  }
  return v;
}

const std::set<std::string_view> kKeywords = {"field", "quiver", "arrow", "relations", "module", "cyclic"};

}  // namespace

PathExpr parse_element(std::string_view text, const Quiver& q, const Field& f, std::size_t line) {
  return parse_expr_at(text, q, f, line, 1);
}

Presentation parse_algebra_spec(std::string_view text) {
  Presentation out;
  bool have_field = false, have_quiver = false, in_relations = false, seen_relations = false;
  std::set<std::string> module_names;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    auto toks = split_ws(raw);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string_view kw = toks[0].text;

    if (kw == "field") {
      if (have_field) throw ParseError(line_no, toks[0].column, "duplicate 'field' directive");
      if (toks.size() != 2) throw ParseError(line_no, toks[0].column, "usage: field <p>");
      const int64_t p = parse_int_token(toks[1], line_no, "a prime");
      if (p < 2 || p >= (int64_t{1} << 31) || !Field::is_prime(static_cast<uint64_t>(p))) {
        throw ParseError(line_no, toks[1].column, "characteristic " + std::to_string(p) + " is not prime");
      }
      out.field = Field(static_cast<uint32_t>(p));
      have_field = true;
      in_relations = false;
    } else if (kw == "quiver") {
      if (have_quiver) throw ParseError(line_no, toks[0].column, "duplicate 'quiver' directive");
      if (toks.size() != 2) throw ParseError(line_no, toks[0].column, "usage: quiver <vertex count>");
      const int64_t n = parse_int_token(toks[1], line_no, "a vertex count");
      if (n < 1 || n > 4096) throw ParseError(line_no, toks[1].column, "vertex count must be in 1..4096");
      out.quiver.vertices = static_cast<uint32_t>(n);
      have_quiver = true;
      in_relations = false;
    } else if (kw == "arrow") {
      if (!have_quiver) throw ParseError(line_no, toks[0].column, "'arrow' before 'quiver'");
      if (seen_relations) throw ParseError(line_no, toks[0].column, "'arrow' after 'relations'");
      if (toks.size() != 4) throw ParseError(line_no, toks[0].column, "usage: arrow <label> <source> <target>");
      const std::string_view label = toks[1].text;
      if (!is_ident_start(label[0]) ||
          !std::all_of(label.begin(), label.end(), is_ident_char) || is_idempotent_token(label) ||
          kKeywords.count(label)) {
        throw ParseError(line_no, toks[1].column, "invalid arrow label '" + std::string(label) + "'");
      }
      if (out.quiver.find(label) >= 0) {
        throw ParseError(line_no, toks[1].column, "duplicate arrow label '" + std::string(label) + "'");
      }
      if (out.quiver.arrows.size() >= 65535) throw ParseError(line_no, toks[0].column, "too many arrows");
      Arrow a{std::string(label), 0, 0};
      for (int k = 0; k < 2; ++k) {
        const int64_t v = parse_int_token(toks[2 + k], line_no, "a vertex");
        if (v < 1 || v > static_cast<int64_t>(out.quiver.vertices)) {
          throw ParseError(line_no, toks[2 + k].column,
                           "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(out.quiver.vertices));
        }
        (k == 0 ? a.source : a.target) = static_cast<uint32_t>(v - 1);
      }
      out.quiver.arrows.push_back(std::move(a));
    } else if (kw == "relations") {
      if (!have_quiver) throw ParseError(line_no, toks[0].column, "'relations' before 'quiver'");
      if (!have_field) throw ParseError(line_no, toks[0].column, "'relations' before 'field'");
      if (seen_relations) throw ParseError(line_no, toks[0].column, "duplicate 'relations' section");
      if (toks.size() != 1) throw ParseError(line_no, toks[1].column, "'relations' takes no arguments");
      in_relations = seen_relations = true;
    } else if (kw == "module") {
      if (!have_quiver || !have_field) throw ParseError(line_no, toks[0].column, "'module' before 'field'/'quiver'");
      in_relations = false;
      // module <name> cyclic e_<i> / (<expr>)
      if (toks.size() < 5 || toks[2].text != "cyclic" || toks[4].text.substr(0, 1) != "/") {
        throw ParseError(line_no, toks[0].column, "usage: module <name> cyclic e_<i> / (<expr>)");
      }
      ModuleDecl decl;
      decl.name = std::string(toks[1].text);
      decl.line = line_no;
      if (!module_names.insert(decl.name).second) {
        throw ParseError(line_no, toks[1].column, "duplicate module name '" + decl.name + "'");
      }
      if (!is_idempotent_token(toks[3].text)) throw ParseError(line_no, toks[3].column, "expected e_<i>");
      int64_t v = 0;
      std::from_chars(toks[3].text.data() + 2, toks[3].text.data() + toks[3].text.size(), v);
      if (v < 1 || v > static_cast<int64_t>(out.quiver.vertices)) {
        throw ParseError(line_no, toks[3].column, "vertex " + std::to_string(v) + " out of range");
      }
      decl.vertex = static_cast<uint32_t>(v - 1);
      const std::size_t slash = toks[4].column;  // 1-based column of '/'
      const std::string_view rest = raw.substr(slash);
      decl.generator_text = std::string(rest);
      decl.generator = parse_expr_at(rest, out.quiver, out.field, line_no, slash + 1);
      for (const auto& [c, p] : decl.generator.terms) {
        if (p.source != decl.vertex) {
          throw ParseError(line_no, slash + 1,
                           "generator term " + to_string(p, out.quiver) + " does not start at vertex " +
                               std::to_string(decl.vertex + 1));
        }
      }
      out.modules.push_back(std::move(decl));
    } else if (in_relations) {
      const std::size_t col = toks[0].column;
      PathExpr rel = parse_expr_at(raw.substr(col - 1), out.quiver, out.field, line_no, col);
      for (const auto& [c, p] : rel.terms) {
        const Path& lead = rel.terms.front().second;
        if (p.source != lead.source || p.target != lead.target) {
          throw ParseError(line_no, col,
                           "relation is not homogeneous: " + to_string(lead, out.quiver) + " and " +
                               to_string(p, out.quiver) + " have different endpoints");
        }
      }
      out.relations.push_back(std::move(rel));
    } else {
      throw ParseError(line_no, toks[0].column, "unknown directive '" + std::string(kw) + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_field) throw ParseError(line_no, 1, "missing 'field' directive");
  if (!have_quiver) throw ParseError(line_no, 1, "missing 'quiver' directive");
  return out;
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "field " << p.field.characteristic() << "\n";
  os << "quiver " << p.quiver.vertices << "\n";
  for (const Arrow& a : p.quiver.arrows) os << "arrow " << a.label << ' ' << a.source + 1 << ' ' << a.target + 1 << "\n";
  os << "relations\n";
  for (const PathExpr& r : p.relations) os << to_string(r, p.quiver) << "\n";
  for (const ModuleDecl& m : p.modules) {
    os << "module " << m.name << " cyclic e_" << m.vertex + 1 << " / (" << to_string(m.generator, p.quiver) << ")\n";
  }
  return os.str();
}

std::string fingerprint(std::string_view text) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace qtilt
