#include "tailforge/toml_lite.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "tailforge/errors.hpp"

namespace tailforge {

namespace {

using nlohmann::json;

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char take() {
    const char c = text[pos++];
    if (c == '\n') ++line;
    return c;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("TOML line " + std::to_string(line) + ": " + what);
  }
};

void skip_spaces(Cursor& c) {
  while (!c.done() && (c.peek() == ' ' || c.peek() == '\t')) c.take();
}

void skip_comment(Cursor& c) {
  if (!c.done() && c.peek() == '#') {
    while (!c.done() && c.peek() != '\n') c.take();
  }
}

// Spaces, comments, and (when crossing is allowed, e.g. inside arrays) newlines.
void skip_filler(Cursor& c, bool cross_lines) {
  for (;;) {
    skip_spaces(c);
    skip_comment(c);
    if (cross_lines && !c.done() && (c.peek() == '\n' || c.peek() == '\r')) {
      c.take();
      continue;
    }
    return;
  }
}

std::string parse_basic_string(Cursor& c) {
  c.take();  // opening quote
  std::string out;
  for (;;) {
    if (c.done()) c.fail("unterminated string");
    const char ch = c.take();
    if (ch == '"') return out;
    if (ch == '\n') c.fail("unterminated string");
    if (ch == '\\') {
      if (c.done()) c.fail("dangling escape");
      const char esc = c.take();
      switch (esc) {
        case '"': out.push_back('"'); break;
        case '\\': out.push_back('\\'); break;
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        case 'r': out.push_back('\r'); break;
        default: c.fail(std::string("unsupported escape '\\") + esc + "'");
      }
    } else {
      out.push_back(ch);
    }
  }
}

std::string parse_key(Cursor& c) {
  if (!c.done() && c.peek() == '"') return parse_basic_string(c);
  std::string key;
  while (!c.done()) {
    const char ch = c.peek();
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-') {
      key.push_back(c.take());
    } else {
      break;
    }
  }
  if (key.empty()) c.fail("expected a key");
  return key;
}

json parse_scalar(Cursor& c) {
  if (c.peek() == '"') return parse_basic_string(c);

  std::string token;
  while (!c.done()) {
    const char ch = c.peek();
    if (ch == ',' || ch == ']' || ch == '#' || ch == '\n' || ch == '\r' || ch == ' ' ||
        ch == '\t') {
      break;
    }
    token.push_back(c.take());
  }
  if (token.empty()) c.fail("expected a value");
  if (token == "true") return true;
  if (token == "false") return false;

  std::string digits;
  digits.reserve(token.size());
  for (std::size_t i = 0; i < token.size(); ++i) {
    if (token[i] == '_') {
      const bool between_digits = i > 0 && i + 1 < token.size() &&
                                  std::isdigit(static_cast<unsigned char>(token[i - 1])) &&
                                  std::isdigit(static_cast<unsigned char>(token[i + 1]));
      if (!between_digits) c.fail("misplaced underscore in number '" + token + "'");
      continue;
    }
    digits.push_back(token[i]);
  }

  const bool looks_float = digits.find_first_of(".eE") != std::string::npos ||
                           digits == "inf" || digits == "+inf" || digits == "-inf" ||
                           digits == "nan";
  if (!looks_float) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return value;
  }
  try {
    std::size_t used = 0;
    const double value = std::stod(digits, &used);
    if (used == digits.size()) return value;
  } catch (const std::exception&) {
  }
  c.fail("cannot parse value '" + token + "' (dates and inline tables are not supported)");
}

json parse_value(Cursor& c) {
  skip_spaces(c);
  if (c.done()) c.fail("expected a value");
  if (c.peek() == '[') {
    c.take();
    json array = json::array();
    for (;;) {
      skip_filler(c, /*cross_lines=*/true);
      if (c.done()) c.fail("unterminated array");
      if (c.peek() == ']') {
        c.take();
        return array;
      }
      if (c.peek() == '[') c.fail("nested arrays are not supported");
      array.push_back(parse_scalar(c));
      skip_filler(c, /*cross_lines=*/true);
      if (c.done()) c.fail("unterminated array");
      if (c.peek() == ',') {
        c.take();
      } else if (c.peek() != ']') {
        c.fail("expected ',' or ']' in array");
      }
    }
  }
  if (c.peek() == '{') c.fail("inline tables are not supported");
  return parse_scalar(c);
}

void expect_line_end(Cursor& c) {
  skip_spaces(c);
  skip_comment(c);
  if (c.done()) return;
  if (c.peek() == '\r') c.take();
  if (c.done()) return;
  if (c.peek() != '\n') c.fail("unexpected trailing characters");
  c.take();
}

}  // namespace

json parse_toml(std::string_view text) {
  json doc = json::object();
  doc[""] = json::object();
  std::string section;

  Cursor c{text};
  while (!c.done()) {
    skip_spaces(c);
    skip_comment(c);
    if (c.done()) break;
    const char ch = c.peek();
    if (ch == '\n' || ch == '\r') {
      c.take();
      continue;
    }
    if (ch == '[') {
      c.take();
      if (!c.done() && c.peek() == '[') c.fail("arrays of tables are not supported");
      skip_spaces(c);
      section = parse_key(c);
      skip_spaces(c);
      if (c.done() || c.peek() != ']') c.fail("expected ']' after section name");
      c.take();
      if (!doc.contains(section)) doc[section] = json::object();
      expect_line_end(c);
      continue;
    }
    const std::size_t line = c.line;
    const std::string key = parse_key(c);
    skip_spaces(c);
    if (c.done() || c.peek() != '=') c.fail("expected '=' after key '" + key + "'");
    c.take();
    json value = parse_value(c);
    json& table = doc[section];
    if (table.contains(key)) {
      throw ParseError("TOML line " + std::to_string(line) + ": duplicate key '" + key + "'");
    }
    table[key] = std::move(value);
    expect_line_end(c);
  }
  return doc;
}

}  // namespace tailforge
