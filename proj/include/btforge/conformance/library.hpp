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

#ifndef BTFORGE_CONFORMANCE_LIBRARY_HPP_
#define BTFORGE_CONFORMANCE_LIBRARY_HPP_

#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace btforge::conformance {

class LibraryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrimitiveSpec {
  std::string name;
  std::vector<std::string> required_attributes;
};

// The fixed action library P. Order of definition is preserved.
class PrimitiveLibrary {
 public:
  // The 22-action default registry.
  static PrimitiveLibrary default_library();

  // Config format, one primitive per line:
  //   NAME [attr[,attr...]]
  // Blank lines and '#' comments are skipped.
  static PrimitiveLibrary load(const std::filesystem::path& path);
  static PrimitiveLibrary parse(std::string_view text);

  void add(PrimitiveSpec spec);
  bool contains(std::string_view name) const;
  const PrimitiveSpec* find(std::string_view name) const;
  const std::vector<PrimitiveSpec>& primitives() const { return primitives_; }
  std::set<std::string> names() const;
  size_t size() const { return primitives_.size(); }

 private:
  std::vector<PrimitiveSpec> primitives_;
};

}  // namespace btforge::conformance

#endif  // BTFORGE_CONFORMANCE_LIBRARY_HPP_
