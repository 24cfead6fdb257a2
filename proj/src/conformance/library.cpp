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

#include "btforge/conformance/library.hpp"

#include <fstream>
#include <sstream>

namespace btforge::conformance {

namespace {

std::string trim(std::string_view s) {
  size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  size_t end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

}  // namespace

PrimitiveLibrary PrimitiveLibrary::default_library() {
  PrimitiveLibrary lib;
  // Manipulation primitives with symbolic execution semantics.
  for (const char* name :
       {"NAVIGATE_TO", "GRASP", "GRAB", "PICK", "PLACE_ON_TOP", "PLACE_INSIDE",
        "PLACE_NEXT_TO", "OPEN", "CLOSE", "TOGGLE_ON", "TOGGLE_OFF",
        "RELEASE"}) {
    lib.add({name, {"obj"}});
  }
  // Registry placeholders accepted by the validator; the symbolic executor
  // has no semantics for these.
  lib.add({"WAIT", {}});
  for (const char* name : {"LOOK_AT", "PUSH", "PULL", "POUR", "WIPE", "SHAKE",
                           "SLICE", "FOLD", "UNFOLD"}) {
    lib.add({name, {"obj"}});
  }
  return lib;
}

PrimitiveLibrary PrimitiveLibrary::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw LibraryError("cannot open library config: " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

PrimitiveLibrary PrimitiveLibrary::parse(std::string_view text) {
  PrimitiveLibrary lib;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;

    std::istringstream fields(stripped);
    PrimitiveSpec spec;
    fields >> spec.name;
    std::string attrs;
    fields >> attrs;
    std::string extra;
    if (fields >> extra) {
      throw LibraryError("line " + std::to_string(line_no) +
                         ": expected 'NAME [attr,attr...]'");
    }
    size_t pos = 0;
    while (pos < attrs.size()) {
      size_t comma = attrs.find(',', pos);
      std::string attr = attrs.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (attr.empty()) {
        throw LibraryError("line " + std::to_string(line_no) +
                           ": empty attribute name");
      }
      spec.required_attributes.push_back(attr);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    lib.add(std::move(spec));
  }
  if (lib.size() == 0) throw LibraryError("library config defines no primitives");
  return lib;
}

void PrimitiveLibrary::add(PrimitiveSpec spec) {
  if (spec.name.empty()) throw LibraryError("primitive name cannot be empty");
  if (contains(spec.name)) {
    throw LibraryError("duplicate primitive '" + spec.name + "'");
  }
  primitives_.push_back(std::move(spec));
}

bool PrimitiveLibrary::contains(std::string_view name) const {
  return find(name) != nullptr;
}

const PrimitiveSpec* PrimitiveLibrary::find(std::string_view name) const {
  for (const PrimitiveSpec& spec : primitives_) {
    if (spec.name == name) return &spec;
  }
  return nullptr;
}

std::set<std::string> PrimitiveLibrary::names() const {
  std::set<std::string> out;
  for (const PrimitiveSpec& spec : primitives_) out.insert(spec.name);
  return out;
}

}  // namespace btforge::conformance
