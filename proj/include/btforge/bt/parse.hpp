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

#ifndef BTFORGE_BT_PARSE_HPP_
#define BTFORGE_BT_PARSE_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "btforge/bt/tree.hpp"

namespace btforge::bt {

enum class ParseErrorCode {
  MalformedXml,         // input is not well-formed XML
  UnknownTag,           // element outside the dialect vocabulary
  MissingAttribute,     // e.g. Action without ID, Retry without num_attempts
  BadAttribute,         // e.g. num_attempts not a positive integer
  MissingMainTree,      // root lacks main_tree_to_execute or it is undefined
  DuplicateTree,        // two BehaviorTree elements share an ID
  ChildArity,           // wrong child count for the node kind
  UnknownTreeReference, // SubTree names an undefined tree
  SubTreeCycle,
  UnexpectedContent,    // character data where only elements are allowed
};

const char* parse_error_code_name(ParseErrorCode code);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ParseErrorCode code() const { return code_; }

 private:
  ParseErrorCode code_;
};

// Parses a BehaviorTree.CPP XML document. Comments are accepted and dropped.
// Unknown attributes on node elements are preserved verbatim; unknown
// attributes on <root> and <BehaviorTree> are ignored. Throws ParseError;
// code MalformedXml means the text is not even well-formed XML, every other
// code means well-formed XML outside the dialect.
BehaviorTree parse_xml(std::string_view text);

}  // namespace btforge::bt

#endif  // BTFORGE_BT_PARSE_HPP_
