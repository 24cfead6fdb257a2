// Copyright 2026 The btforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "btforge/xml/dom.hpp"

#include <cctype>
#include <charconv>

namespace btforge::xml {

namespace {

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' ||
         c == '-' || c == '.';
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

void append_utf8(std::string& out, unsigned long cp) {
  if (cp <= 0x7F) {
    out.push_back(static_cast<char>(cp));
  } else if (cp <= 0x7FF) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp <= 0xFFFF) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {
    // UTF-8 BOM
    if (text_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
  }

  Document parse() {
    skip_misc();
    if (eof()) fail("document has no root element");
    Element root = parse_element();
    skip_misc();
    if (!eof()) fail("content after the root element");
    return Document{std::move(root)};
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw XmlError(line_, msg);
  }

  bool eof() const { return pos_ >= text_.size(); }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  char get() {
    if (eof()) fail("unexpected end of input");
    char c = text_[pos_++];
    if (c == '\n') ++line_;
    return c;
  }

  bool starts_with(std::string_view s) const {
    return text_.compare(pos_, s.size(), s) == 0;
  }

  void advance(size_t n) {
    for (size_t i = 0; i < n; ++i) get();
  }

  void skip_whitespace() {
    while (!eof() && is_space(peek())) get();
  }

  // Whitespace, comments, PIs and a possible DOCTYPE between markup.
  void skip_misc() {
    for (;;) {
      skip_whitespace();
      if (starts_with("<!--")) {
        skip_comment();
      } else if (starts_with("<?")) {
        skip_pi();
      } else if (starts_with("<!DOCTYPE")) {
        skip_doctype();
      } else {
        return;
      }
    }
  }

  void skip_comment() {
    advance(4);  // <!--
    for (;;) {
      if (eof()) fail("unterminated comment");
      if (starts_with("-->")) {
        advance(3);
        return;
      }
      get();
    }
  }

  void skip_pi() {
    advance(2);  // <?
    for (;;) {
      if (eof()) fail("unterminated processing instruction");
      if (starts_with("?>")) {
        advance(2);
        return;
      }
      get();
    }
  }

  void skip_doctype() {
    advance(9);  // <!DOCTYPE
    for (;;) {
      if (eof()) fail("unterminated DOCTYPE");
      char c = get();
      if (c == '[') fail("DOCTYPE internal subsets are not supported");
      if (c == '>') return;
    }
  }

  std::string parse_name() {
    if (eof() || !is_name_start(peek())) fail("expected a name");
    std::string name;
    name.push_back(get());
    while (!eof() && is_name_char(peek())) name.push_back(get());
    return name;
  }

  // "&" already consumed.
  void parse_entity(std::string& out) {
    std::string ent;
    for (;;) {
      if (eof()) fail("unterminated entity reference");
      char c = get();
      if (c == ';') break;
      ent.push_back(c);
      if (ent.size() > 8) fail("unterminated entity reference");
    }
    if (ent == "lt") {
      out.push_back('<');
    } else if (ent == "gt") {
      out.push_back('>');
    } else if (ent == "amp") {
      out.push_back('&');
    } else if (ent == "apos") {
      out.push_back('\'');
    } else if (ent == "quot") {
      out.push_back('"');
    } else if (!ent.empty() && ent[0] == '#') {
      unsigned long cp = 0;
      const char* first = ent.data() + 1;
      const char* last = ent.data() + ent.size();
      std::from_chars_result r{};
      if (ent.size() > 2 && (ent[1] == 'x' || ent[1] == 'X')) {
        r = std::from_chars(first + 1, last, cp, 16);
      } else {
        r = std::from_chars(first, last, cp, 10);
      }
      if (r.ec != std::errc() || r.ptr != last || cp == 0 || cp > 0x10FFFF) {
        fail("invalid character reference '&" + ent + ";'");
      }
      append_utf8(out, cp);
    } else {
      fail("unknown entity '&" + ent + ";'");
    }
  }

  std::string parse_attribute_value() {
    char quote = get();
    if (quote != '"' && quote != '\'') fail("attribute value must be quoted");
    std::string value;
    for (;;) {
      if (eof()) fail("unterminated attribute value");
      char c = get();
      if (c == quote) break;
      if (c == '<') fail("'<' is not allowed in attribute values");
      if (c == '&') {
        parse_entity(value);
      } else {
        value.push_back(c);
      }
    }
    return value;
  }

  Element parse_element() {
    Element elem;
    elem.line = line_;
    if (get() != '<') fail("expected '<'");
    elem.name = parse_name();

    for (;;) {
      bool had_space = !eof() && is_space(peek());
      skip_whitespace();
      if (eof()) fail("unterminated start tag <" + elem.name + ">");
      if (starts_with("/>")) {
        advance(2);
        return elem;
      }
      if (peek() == '>') {
        get();
        parse_content(elem);
        return elem;
      }
      if (!had_space) fail("expected whitespace before attribute");
      std::string attr_name = parse_name();
      for (const auto& [existing, _] : elem.attributes) {
        if (existing == attr_name) {
          fail("duplicate attribute '" + attr_name + "'");
        }
      }
      skip_whitespace();
      if (eof() || get() != '=') fail("expected '=' after attribute name");
      skip_whitespace();
      elem.attributes.emplace_back(attr_name, parse_attribute_value());
    }
  }

  void parse_content(Element& elem) {
    for (;;) {
      if (eof()) fail("missing closing tag </" + elem.name + ">");
      char c = peek();
      if (c == '<') {
        if (starts_with("<!--")) {
          skip_comment();
        } else if (starts_with("<![CDATA[")) {
          parse_cdata(elem);
        } else if (starts_with("<?")) {
          skip_pi();
        } else if (starts_with("</")) {
          advance(2);
          std::string close_name = parse_name();
          if (close_name != elem.name) {
            fail("mismatched closing tag </" + close_name + ">, expected </" +
                 elem.name + ">");
          }
          skip_whitespace();
          if (eof() || get() != '>') fail("malformed closing tag");
          return;
        } else {
          elem.children.push_back(parse_element());
        }
      } else if (c == '&') {
        get();
        parse_entity(elem.text);
      } else {
        elem.text.push_back(get());
      }
    }
  }

  void parse_cdata(Element& elem) {
    advance(9);  // <![CDATA[
    for (;;) {
      if (eof()) fail("unterminated CDATA section");
      if (starts_with("]]>")) {
        advance(3);
        return;
      }
      elem.text.push_back(get());
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
};

}  // namespace

const std::string* Element::find_attribute(std::string_view attr_name) const {
  for (const auto& [name, value] : attributes) {
    if (name == attr_name) return &value;
  }
  return nullptr;
}

bool Element::has_non_whitespace_text() const {
  for (char c : text) {
    if (!is_space(c)) return true;
  }
  return false;
}

Document parse_document(std::string_view text) {
  return Scanner(text).parse();
}

std::string escape_text(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string escape_attribute(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace btforge::xml
