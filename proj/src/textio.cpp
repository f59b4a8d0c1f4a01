#include "twist/textio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "twist/errors.hpp"

namespace twist {

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

struct Line {
  std::string_view text;  // comment stripped
  std::size_t number;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (std::any_of(line.begin(), line.end(),
                    [](char c) { return !std::isspace(static_cast<unsigned char>(c)); }))
      out.push_back({line, number});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::vector<Token> tokens_of(std::string_view text, std::size_t line,
                             std::size_t column_offset = 0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    out.push_back({text.substr(start, i - start), line, column_offset + start + 1});
  }
  return out;
}

std::vector<Token> all_tokens(std::string_view text) {
  std::vector<Token> out;
  for (const auto& l : content_lines(text)) {
    auto t = tokens_of(l.text, l.number);
    out.insert(out.end(), t.begin(), t.end());
  }
  return out;
}

[[noreturn]] void fail_at(const Token& t, const std::string& what) {
  throw ParseError(what + " (got '" + std::string(t.text) + "')", t.line, t.column);
}

std::int64_t to_int64(const Token& t) {
  std::string s(t.text);
  std::size_t used = 0;
  try {
    long long v = std::stoll(s, &used);
    if (used != s.size()) fail_at(t, "expected an integer");
    return v;
  } catch (const std::logic_error&) {
    fail_at(t, "expected an integer");
  }
}

Integer to_integer(const Token& t) {
  Integer v;
  std::string s(t.text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty() || v.set_str(s, 10) != 0) fail_at(t, "expected an integer");
  return v;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s.front())) || s.front() == '_'))
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Parses "<keyword>: names..." into generator names.
std::vector<std::string> parse_generators_line(const Line& line) {
  constexpr std::string_view kKey = "generators:";
  std::string_view body = trim(line.text);
  if (!body.starts_with(kKey))
    throw ParseError("expected 'generators:'", line.number, 1);
  std::size_t offset = static_cast<std::size_t>(body.data() - line.text.data()) + kKey.size();
  std::vector<std::string> names;
  for (const auto& t : tokens_of(line.text.substr(offset), line.number, offset)) {
    if (!is_identifier(t.text)) fail_at(t, "generator names must be identifiers");
    if (std::find(names.begin(), names.end(), t.text) != names.end())
      fail_at(t, "duplicate generator name");
    names.emplace_back(t.text);
  }
  return names;
}

std::size_t name_index(const Token& t, std::string_view name,
                       const std::vector<std::string>& names) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) fail_at(t, "unknown generator '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - names.begin());
}

std::string int_token(std::int64_t v) { return std::to_string(v); }

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& names,
                std::size_t line, std::size_t column_offset) {
  Word w;
  for (const auto& t : tokens_of(text, line, column_offset)) {
    if (t.text == "1") continue;
    std::string_view name = t.text;
    std::int64_t exponent = 1;
    if (auto caret = t.text.find('^'); caret != std::string_view::npos) {
      name = t.text.substr(0, caret);
      Token exp_token{t.text.substr(caret + 1), t.line, t.column + caret + 1};
      exponent = to_int64(exp_token);
      if (exponent == 0) fail_at(t, "exponent must be nonzero");
    }
    w.append(Syllable{static_cast<std::uint32_t>(name_index(t, name, names)), exponent});
  }
  return w;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += names.at(s.generator);
    if (s.exponent != 1) out += "^" + int_token(s.exponent);
  }
  return out;
}

NamedEndo parse_monodromy(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty monodromy file", 1, 1);
  NamedEndo out;
  out.names = parse_generators_line(lines.front());
  if (out.names.empty()) throw ParseError("no generators", lines.front().number, 1);
  std::vector<std::optional<Word>> images(out.names.size());
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    auto arrow = l.text.find("->");
    if (arrow == std::string_view::npos) throw ParseError("expected 'x -> word'", l.number, 1);
    auto lhs = tokens_of(l.text.substr(0, arrow), l.number);
    if (lhs.size() != 1) throw ParseError("expected one generator before '->'", l.number, 1);
    std::size_t g = name_index(lhs.front(), lhs.front().text, out.names);
    if (images[g]) fail_at(lhs.front(), "generator image given twice");
    images[g] = parse_word(l.text.substr(arrow + 2), out.names, l.number, arrow + 2);
  }
  std::vector<Word> words;
  for (std::size_t g = 0; g < images.size(); ++g) {
    if (!images[g])
      throw ParseError("no image for generator '" + out.names[g] + "'", lines.back().number, 1);
    words.push_back(*images[g]);
  }
  out.endo = FreeEndo(out.names.size(), std::move(words));
  return out;
}

std::string format_monodromy(const NamedEndo& m) {
  std::string out = "generators:";
  for (const auto& n : m.names) out += " " + n;
  out += "\n";
  for (std::size_t g = 0; g < m.names.size(); ++g)
    out += m.names[g] + " -> " + format_word(m.endo.image(g), m.names) + "\n";
  return out;
}

namespace {

template <typename T, typename Convert>
DenseMatrix<T> parse_matrix(std::string_view text, Convert convert) {
  auto tokens = all_tokens(text);
  if (tokens.size() < 2) throw ParseError("expected 'rows cols' header", 1, 1);
  std::int64_t rows = to_int64(tokens[0]);
  std::int64_t cols = to_int64(tokens[1]);
  if (rows < 0 || cols < 0) fail_at(tokens[0], "matrix dimensions must be nonnegative");
  auto count = static_cast<std::size_t>(rows * cols);
  if (tokens.size() != count + 2) {
    const Token& where = tokens.size() > count + 2 ? tokens[count + 2] : tokens.back();
    fail_at(where, "expected " + std::to_string(count) + " entries, found " +
                       std::to_string(tokens.size() - 2));
  }
  DenseMatrix<T> m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t k = 0; k < count; ++k)
    m(k / m.cols(), k % m.cols()) = convert(tokens[k + 2]);
  return m;
}

template <typename T, typename Format>
std::string format_matrix(const DenseMatrix<T>& m, Format fmt) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += fmt(m(i, j));
    }
    out += "\n";
  }
  return out;
}

}  // namespace

IntMatrix parse_int_matrix(std::string_view text) {
  return parse_matrix<Integer>(text, to_integer);
}

LambdaMatrix parse_lambda_matrix(std::string_view text) {
  return parse_matrix<LaurentPoly>(text, [](const Token& t) {
    try {
      return parse_laurent(t.text);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " in '" + std::string(t.text) + "'", t.line,
                       t.column + (e.column() > 0 ? e.column() - 1 : 0));
    }
  });
}

std::string format_int_matrix(const IntMatrix& m) {
  return format_matrix(m, [](const Integer& x) { return x.get_str(); });
}

std::string format_lambda_matrix(const LambdaMatrix& m) {
  return format_matrix(m, [](const LaurentPoly& p) { return to_token(p); });
}

SeifertMatrix parse_seifert(std::string_view text) {
  auto tokens = all_tokens(text);
  if (tokens.empty()) throw ParseError("expected size 2g", 1, 1);
  std::int64_t n = to_int64(tokens[0]);
  if (n < 0 || n % 2 != 0) fail_at(tokens[0], "Seifert matrix size must be even and nonnegative");
  auto count = static_cast<std::size_t>(n * n);
  if (tokens.size() != count + 1) {
    const Token& where = tokens.size() > count + 1 ? tokens[count + 1] : tokens.back();
    fail_at(where, "expected " + std::to_string(count) + " entries, found " +
                       std::to_string(tokens.size() - 1));
  }
  IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < count; ++k) m(k / m.cols(), k % m.cols()) = to_integer(tokens[k + 1]);
  return SeifertMatrix(std::move(m));
}

std::string format_seifert(const SeifertMatrix& s) {
  const IntMatrix& m = s.matrix();
  std::string out = std::to_string(m.rows()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m(i, j).get_str();
    }
    out += "\n";
  }
  return out;
}

NamedPresentation parse_presentation(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty presentation file", 1, 1);
  NamedPresentation out;
  out.names = parse_generators_line(lines.front());
  out.presentation.rank = out.names.size();
  constexpr std::string_view kKey = "relator:";
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    std::string_view body = trim(l.text);
    if (!body.starts_with(kKey)) throw ParseError("expected 'relator:'", l.number, 1);
    std::size_t offset = static_cast<std::size_t>(body.data() - l.text.data()) + kKey.size();
    out.presentation.relators.push_back(
        parse_word(l.text.substr(offset), out.names, l.number, offset));
  }
  return out;
}

std::string format_presentation(const NamedPresentation& p) {
  std::string out = "generators:";
  for (const auto& n : p.names) out += " " + n;
  out += "\n";
  for (const auto& r : p.presentation.relators)
    out += "relator: " + format_word(r, p.names) + "\n";
  return out;
}

namespace {

Perm parse_element(std::string_view value, const GroupTarget& target, std::size_t line,
                   std::size_t column) {
  value = trim(value);
  if (target.kind == GroupTarget::Kind::cyclic && !value.starts_with("(")) {
    Token t{value, line, column};
    return Perm::rotation(target.parameter, to_int64(t));
  }
  if (target.kind == GroupTarget::Kind::cyclic)
    throw ParseError("cyclic targets take integer values", line, column);
  try {
    return parse_cycles(value, target.degree());
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line, column + (e.column() > 0 ? e.column() - 1 : 0));
  }
}

}  // namespace

FiniteHom parse_hom(std::string_view text, const std::vector<std::string>& names) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty homomorphism file", 1, 1);
  std::string_view head = trim(lines.front().text);
  constexpr std::string_view kKey = "target:";
  if (!head.starts_with(kKey)) throw ParseError("expected 'target:'", lines.front().number, 1);
  GroupTarget target;
  try {
    target = parse_target(head.substr(kKey.size()));
  } catch (const ParseError& e) {
    throw ParseError(e.what(), lines.front().number, 1);
  }
  std::vector<std::optional<Perm>> images(names.size());
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    auto eq = l.text.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'name = value'", l.number, 1);
    auto lhs = tokens_of(l.text.substr(0, eq), l.number);
    if (lhs.size() != 1) throw ParseError("expected one generator before '='", l.number, 1);
    std::size_t g = name_index(lhs.front(), lhs.front().text, names);
    if (images[g]) fail_at(lhs.front(), "generator assigned twice");
    images[g] = parse_element(l.text.substr(eq + 1), target, l.number, eq + 2);
  }
  std::vector<Perm> out;
  for (std::size_t g = 0; g < names.size(); ++g) {
    if (!images[g]) throw ParseError("no value for generator '" + names[g] + "'", lines.back().number, 1);
    out.push_back(*images[g]);
  }
  return FiniteHom(target, std::move(out));
}

std::string format_hom(const FiniteHom& h, const std::vector<std::string>& names) {
  std::string out = "target: " + h.target().name() + "\n";
  for (std::size_t g = 0; g < h.rank(); ++g) {
    out += names.at(g) + " = ";
    if (h.target().kind == GroupTarget::Kind::cyclic)
      out += std::to_string(cyclic_value(h.image(g)));
    else
      out += to_cycle_string(h.image(g));
    out += "\n";
  }
  return out;
}

FiniteHom parse_inline_alpha(std::string_view text, const std::vector<std::string>& names) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("expected 'Z/r:x=a,...'", 1, 1);
  GroupTarget target = parse_target(text.substr(0, colon));
  if (target.kind != GroupTarget::Kind::cyclic)
    throw ParseError("inline homomorphisms need a cyclic target", 1, 1);
  std::vector<std::optional<std::int64_t>> values(names.size());
  std::size_t pos = colon + 1;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'name=value'", 1, pos + 1);
    Token name{trim(item.substr(0, eq)), 1, pos + 1};
    std::size_t g = name_index(name, name.text, names);
    if (values[g]) fail_at(name, "generator assigned twice");
    values[g] = to_int64(Token{trim(item.substr(eq + 1)), 1, pos + eq + 2});
    pos = end + 1;
  }
  std::vector<std::int64_t> out;
  for (std::size_t g = 0; g < names.size(); ++g) {
    if (!values[g]) throw ParseError("no value for generator '" + names[g] + "'", 1, text.size());
    out.push_back(*values[g]);
  }
  return FiniteHom::cyclic(target.parameter, out);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace twist
