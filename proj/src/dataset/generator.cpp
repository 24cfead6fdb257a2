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

#include "btforge/dataset/generator.hpp"

#include <csignal>
#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>

#include <cctype>
#include <cstring>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

namespace btforge::dataset {

using nlohmann::json;

std::string GeneratorRequest::to_json() const {
  json doc;
  doc["stage"] = stage;
  doc["instruction"] = instruction;
  doc["image_paths"] = image_paths;
  if (scene_analysis) {
    doc["scene_analysis"] = {
        {"target", scene_analysis->target},
        {"destination", scene_analysis->destination},
        {"expanded_instruction", scene_analysis->expanded_instruction},
        {"scene_context", scene_analysis->scene_context},
        {"expected_sequence", scene_analysis->expected_sequence},
    };
  }
  doc["library"] = library;
  return doc.dump();
}

// ---------------------------------------------------------------------------
// Command transport
// ---------------------------------------------------------------------------

CommandGenerator::CommandGenerator(std::string command)
    : command_(std::move(command)) {
  if (command_.empty()) throw GeneratorError("generator command is empty");
}

std::string CommandGenerator::generate(const GeneratorRequest& request) {
  // A child that exits without draining stdin must surface as an error,
  // not kill this process with SIGPIPE.
  static const bool sigpipe_ignored = [] {
    signal(SIGPIPE, SIG_IGN);
    return true;
  }();
  (void)sigpipe_ignored;

  int to_child[2];
  int from_child[2];
  if (pipe(to_child) != 0 || pipe(from_child) != 0) {
    throw GeneratorError("pipe() failed");
  }

  pid_t pid = fork();
  if (pid < 0) throw GeneratorError("fork() failed");
  if (pid == 0) {
    dup2(to_child[0], STDIN_FILENO);
    dup2(from_child[1], STDOUT_FILENO);
    close(to_child[0]);
    close(to_child[1]);
    close(from_child[0]);
    close(from_child[1]);
    execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }

  close(to_child[0]);
  close(from_child[1]);

  // Interleave writing the request and draining the response so a child
  // that floods stdout before reading stdin cannot deadlock the pipe pair.
  // The write side must be nonblocking: a blocking pipe write would not
  // return until the whole buffer is transferred.
  std::string payload = request.to_json();
  payload.push_back('\n');
  size_t written = 0;
  int in_fd = to_child[1];
  int out_fd = from_child[0];
  fcntl(in_fd, F_SETFL, fcntl(in_fd, F_GETFL) | O_NONBLOCK);
  std::string output;
  char buffer[4096];
  while (in_fd >= 0 || out_fd >= 0) {
    pollfd fds[2];
    nfds_t count = 0;
    if (in_fd >= 0) fds[count++] = {in_fd, POLLOUT, 0};
    if (out_fd >= 0) fds[count++] = {out_fd, POLLIN, 0};
    if (poll(fds, count, -1) < 0) {
      if (errno == EINTR) continue;
      break;
    }
    for (nfds_t i = 0; i < count; ++i) {
      if (fds[i].fd == in_fd && (fds[i].revents & (POLLOUT | POLLERR))) {
        ssize_t n = write(in_fd, payload.data() + written,
                          payload.size() - written);
        if (n > 0) written += static_cast<size_t>(n);
        if ((n < 0 && errno != EAGAIN && errno != EINTR) ||
            written == payload.size()) {
          close(in_fd);  // EPIPE: the child stopped reading, that is fine
          in_fd = -1;
        }
      } else if (fds[i].fd == out_fd &&
                 (fds[i].revents & (POLLIN | POLLHUP | POLLERR))) {
        ssize_t n = read(out_fd, buffer, sizeof(buffer));
        if (n > 0) {
          output.append(buffer, static_cast<size_t>(n));
        } else {
          close(out_fd);
          out_fd = -1;
        }
      }
    }
  }
  if (in_fd >= 0) close(in_fd);
  if (out_fd >= 0) close(out_fd);

  int status = 0;
  waitpid(pid, &status, 0);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    throw GeneratorError("GeneratorUnavailable: command '" + command_ +
                         "' exited with status " +
                         std::to_string(WIFEXITED(status)
                                            ? WEXITSTATUS(status)
                                            : -1));
  }
  return output;
}

// ---------------------------------------------------------------------------
// HTTP transport
// ---------------------------------------------------------------------------

HttpGenerator::HttpGenerator(std::string url) {
  const std::string prefix = "http://";
  if (url.rfind(prefix, 0) != 0) {
    throw GeneratorError("generator URL must start with http://");
  }
  std::string rest = url.substr(prefix.size());
  size_t slash = rest.find('/');
  std::string authority = slash == std::string::npos ? rest
                                                     : rest.substr(0, slash);
  path_ = slash == std::string::npos ? "/" : rest.substr(slash);
  size_t colon = authority.find(':');
  if (colon == std::string::npos) {
    host_ = authority;
  } else {
    host_ = authority.substr(0, colon);
    try {
      port_ = std::stoi(authority.substr(colon + 1));
    } catch (const std::exception&) {
      port_ = 0;
    }
    if (port_ <= 0 || port_ > 65535) {
      throw GeneratorError("generator URL has a bad port: " + authority);
    }
  }
  if (host_.empty()) throw GeneratorError("generator URL has no host");
}

std::string HttpGenerator::generate(const GeneratorRequest& request) {
  httplib::Client client(host_, port_);
  client.set_read_timeout(120, 0);
  auto result = client.Post(path_, request.to_json(), "application/json");
  if (!result) {
    throw GeneratorError("GeneratorUnavailable: cannot reach http://" + host_ +
                         ":" + std::to_string(port_) + path_);
  }
  if (result->status != 200) {
    throw GeneratorError("generator returned HTTP " +
                         std::to_string(result->status));
  }
  return result->body;
}

// ---------------------------------------------------------------------------
// Deterministic mock
// ---------------------------------------------------------------------------

namespace {

struct PlannedStep {
  std::string action;
  std::string object;
};

bool is_identifier(const std::string& token) {
  if (token.empty()) return false;
  for (char c : token) {
    if (!std::isupper(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::string strip_punct(std::string word) {
  while (!word.empty() && (word.back() == '.' || word.back() == ',' ||
                           word.back() == '!' || word.back() == ';')) {
    word.pop_back();
  }
  return word;
}

// Trailing "N. ACTION object" lines, typically appended CoT workflows.
std::vector<PlannedStep> parse_workflow_lines(const std::string& instruction) {
  std::vector<PlannedStep> steps;
  std::istringstream in(instruction);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string first;
    fields >> first;
    if (first.empty()) continue;
    // Optional "N." prefix.
    bool numbered = true;
    for (char c : first) {
      if (!std::isdigit(static_cast<unsigned char>(c)) && c != '.') {
        numbered = false;
      }
    }
    std::string action = first;
    if (numbered) {
      if (!(fields >> action)) continue;
    }
    if (!is_identifier(action)) continue;
    PlannedStep step;
    step.action = action;
    fields >> step.object;
    step.object = strip_punct(step.object);
    steps.push_back(std::move(step));
  }
  return steps;
}

// "move|put|place|bring <obj> to|in|into|on|onto <dest>"
bool parse_move_pattern(const std::string& instruction, std::string& obj,
                        std::string& dest, bool& inside) {
  std::istringstream in(instruction);
  std::vector<std::string> words;
  std::string word;
  while (in >> word) {
    std::string lower;
    for (char c : word) {
      lower.push_back(
          static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    words.push_back(strip_punct(lower));
  }
  size_t verb = words.size();
  for (size_t i = 0; i < words.size(); ++i) {
    if (words[i] == "move" || words[i] == "put" || words[i] == "place" ||
        words[i] == "bring" || words[i] == "carry") {
      verb = i;
      break;
    }
  }
  if (verb == words.size()) return false;
  size_t prep = words.size();
  for (size_t i = verb + 1; i < words.size(); ++i) {
    if (words[i] == "to" || words[i] == "in" || words[i] == "into" ||
        words[i] == "on" || words[i] == "onto" || words[i] == "inside") {
      prep = i;
      break;
    }
  }
  if (prep == words.size() || prep == verb + 1 || prep + 1 >= words.size()) {
    return false;
  }
  auto join = [&](size_t from, size_t to) {
    std::string out;
    for (size_t i = from; i < to; ++i) {
      if (words[i] == "the" || words[i] == "a" || words[i] == "an") continue;
      if (!out.empty()) out.push_back('_');
      out += words[i];
    }
    return out;
  };
  obj = join(verb + 1, prep);
  dest = join(prep + 1, words.size());
  inside = words[prep] == "in" || words[prep] == "into" ||
           words[prep] == "inside";
  return !obj.empty() && !dest.empty();
}

std::string xml_for_steps(const std::vector<PlannedStep>& steps) {
  std::string xml = "<root main_tree_to_execute=\"MainTree\">\n";
  xml += "  <BehaviorTree ID=\"MainTree\">\n    <Sequence>\n";
  for (const PlannedStep& step : steps) {
    xml += "      <Action ID=\"" + step.action + "\"";
    if (!step.object.empty()) xml += " obj=\"" + step.object + "\"";
    xml += "/>\n";
  }
  xml += "    </Sequence>\n  </BehaviorTree>\n</root>\n";
  return xml;
}

}  // namespace

std::string TemplateMockGenerator::generate(const GeneratorRequest& request) {
  std::vector<PlannedStep> steps = parse_workflow_lines(request.instruction);
  std::string obj;
  std::string dest;
  bool inside = false;
  if (steps.empty() &&
      parse_move_pattern(request.instruction, obj, dest, inside)) {
    steps = {{"NAVIGATE_TO", obj},
             {"GRASP", obj},
             {"NAVIGATE_TO", dest},
             {inside ? "PLACE_INSIDE" : "PLACE_ON_TOP", dest}};
  }

  if (request.stage == "scene_analysis") {
    SceneAnalysis analysis;
    analysis.target = "object";
    analysis.destination = "destination";
    for (const PlannedStep& step : steps) {
      if (step.action == "GRASP" || step.action == "GRAB" ||
          step.action == "PICK") {
        analysis.target = step.object;
        break;
      }
    }
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      if (it->action.rfind("PLACE", 0) == 0 || it->action == "TOGGLE_ON" ||
          it->action == "OPEN") {
        analysis.destination = it->object;
        break;
      }
    }
    std::string first_line = request.instruction;
    size_t newline = first_line.find('\n');
    if (newline != std::string::npos) first_line.resize(newline);
    analysis.expanded_instruction = first_line;
    analysis.scene_context =
        "Workspace with " + analysis.target + " and " + analysis.destination + ".";
    if (steps.empty()) {
      analysis.expected_sequence = "Inspect the scene and act.";
    } else {
      std::string sequence;
      for (const PlannedStep& step : steps) {
        if (!sequence.empty()) sequence += ", then ";
        sequence += step.action + " " + step.object;
      }
      analysis.expected_sequence = sequence;
    }
    return to_yaml(analysis);
  }

  if (request.stage == "architect") {
    if (steps.empty()) {
      std::string target = request.scene_analysis
                               ? request.scene_analysis->target
                               : std::string("object");
      steps = {{"NAVIGATE_TO", target}, {"GRASP", target}};
    }
    return xml_for_steps(steps);
  }
  throw GeneratorError("unknown stage '" + request.stage + "'");
}

std::unique_ptr<Generator> make_command_generator(const std::string& command) {
  return std::make_unique<CommandGenerator>(command);
}

std::unique_ptr<Generator> make_http_generator(const std::string& url) {
  return std::make_unique<HttpGenerator>(url);
}

std::unique_ptr<Generator> make_mock_generator() {
  return std::make_unique<TemplateMockGenerator>();
}

}  // namespace btforge::dataset
