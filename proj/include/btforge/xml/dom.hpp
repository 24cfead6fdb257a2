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

#ifndef BTFORGE_XML_DOM_HPP_
#define BTFORGE_XML_DOM_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace btforge::xml {

// Thrown on any well-formedness violation. The message carries a 1-based
// line number of the offending input position.
class XmlError : public std::runtime_error {
 public:
  XmlError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct Element {
  std::string name;
  // Attributes in document order; names are unique within an element.
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<Element> children;
  // Concatenated character data (entities decoded, CDATA included).
  std::string text;
  int line = 0;

  const std::string* find_attribute(std::string_view attr_name) const;
  bool has_non_whitespace_text() const;
};

struct Document {
  Element root;
};

// Parses a standalone XML document: optional declaration, comments and
// processing instructions anywhere, exactly one root element, nothing but
// misc content after it. Throws XmlError if the input is not well formed.
Document parse_document(std::string_view text);

// Escapes &, <, > (text) plus " (attribute values).
std::string escape_text(std::string_view raw);
std::string escape_attribute(std::string_view raw);

}  // namespace btforge::xml

#endif  // BTFORGE_XML_DOM_HPP_
