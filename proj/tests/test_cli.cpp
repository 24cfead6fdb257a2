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

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "btforge/dataset/image.hpp"
#include "test_helpers.hpp"

#ifndef BTFORGE_BIN
#define BTFORGE_BIN "btforge"
#endif
#ifndef BTFORGE_MOCKGEN
#define BTFORGE_MOCKGEN "mockgen"
#endif

namespace fs = std::filesystem;
using namespace btforge;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  std::string command = std::string(BTFORGE_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.output.append(buffer, n);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

const char* kStackTree =
    "<root main_tree_to_execute=\"T\">\n"
    "  <BehaviorTree ID=\"T\">\n"
    "    <Sequence><Action ID=\"STACK\" obj=\"box\"/></Sequence>\n"
    "  </BehaviorTree>\n"
    "</root>\n";

std::string tasks_dir() { return (testing::data_dir() / "tasks").string(); }
std::string trees_dir() { return (testing::data_dir() / "trees").string(); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("validate: the bundled corpus conforms") {
  RunResult result =
      run("validate " + (testing::data_dir() / "corpus").string() + "/*.xml");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("50/50 files conform") != std::string::npos);
}

TEST_CASE("validate: one STACK tree flips the exit code and is named") {
  fs::path dir = testing::fresh_dir("cli_validate");
  testing::write_file(dir / "good.xml", testing::teapot_xml());
  testing::write_file(dir / "bad.xml", kStackTree);
  RunResult result = run("validate " + (dir / "good.xml").string() + " " +
                         (dir / "bad.xml").string());
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("bad.xml") != std::string::npos);
  CHECK(result.output.find("STACK") != std::string::npos);
  CHECK(result.output.find("1/2 files conform") != std::string::npos);
}

TEST_CASE("validate: a missing file is a usage error") {
  RunResult result = run("validate /nonexistent/missing.xml");
  CHECK(result.exit_code == 2);
}

TEST_CASE("validate: record output is line-delimited JSON") {
  fs::path dir = testing::fresh_dir("cli_records");
  testing::write_file(dir / "tree.xml", testing::teapot_xml());
  RunResult result =
      run("--format records validate " + (dir / "tree.xml").string());
  CHECK(result.exit_code == 0);
  nlohmann::json record = nlohmann::json::parse(result.output);
  CHECK(record["verdict"] == true);
  CHECK(record["xml_valid"] == true);
}

TEST_CASE("--out mirrors the records into a file") {
  fs::path dir = testing::fresh_dir("cli_out");
  testing::write_file(dir / "tree.xml", testing::teapot_xml());
  RunResult result = run("--out " + (dir / "reports").string() + " validate " +
                         (dir / "tree.xml").string());
  CHECK(result.exit_code == 0);
  std::string records = testing::read_file(dir / "reports" / "validate.jsonl");
  nlohmann::json record = nlohmann::json::parse(records);
  CHECK(record["verdict"] == true);
}

TEST_CASE("validate honors --allowed") {
  fs::path dir = testing::fresh_dir("cli_allowed");
  testing::write_file(dir / "tree.xml", testing::teapot_xml());
  RunResult ok = run("validate --allowed NAVIGATE_TO,GRASP,PLACE_ON_TOP " +
                     (dir / "tree.xml").string());
  CHECK(ok.exit_code == 0);
  RunResult narrow =
      run("validate --allowed NAVIGATE_TO " + (dir / "tree.xml").string());
  CHECK(narrow.exit_code == 1);
  CHECK(narrow.output.find("disallowed") != std::string::npos);
}

TEST_CASE("BTFORGE_LIBRARY supplies the default library") {
  fs::path dir = testing::fresh_dir("cli_env");
  testing::write_file(dir / "stack.xml", kStackTree);
  testing::write_file(dir / "lib.cfg", "STACK obj\n");
  RunResult result = run("validate " + (dir / "stack.xml").string());
  CHECK(result.exit_code == 1);
  RunResult with_env =
      run(std::string("validate ") + (dir / "stack.xml").string() +
          " --library " + (dir / "lib.cfg").string());
  CHECK(with_env.exit_code == 0);
  // Same via the environment variable.
  std::string command = "BTFORGE_LIBRARY=" + (dir / "lib.cfg").string() + " " +
                        BTFORGE_BIN + " validate " +
                        (dir / "stack.xml").string() + " >/dev/null 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 0);
}

TEST_CASE("exec: reference tree satisfies the teapot goal") {
  RunResult result =
      run("exec --task " + tasks_dir() + "/placing_teapot_on_stove.json " +
          trees_dir() + "/placing_teapot_on_stove.xml");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("goal satisfied") != std::string::npos);
}

TEST_CASE("exec: ordering-violating tree reports HANDS_FULL and fails") {
  fs::path dir = testing::fresh_dir("cli_exec");
  testing::write_file(dir / "bad_order.xml",
                      R"(<root main_tree_to_execute="T"><BehaviorTree ID="T">
      <Sequence>
        <Action ID="NAVIGATE_TO" obj="beefsteak_tomato"/>
        <Action ID="GRASP" obj="beefsteak_tomato"/>
        <Action ID="OPEN" obj="electric_refrigerator"/>
      </Sequence>
    </BehaviorTree></root>)");
  RunResult result =
      run("exec --task " + tasks_dir() + "/carrying_in_groceries.json " +
          (dir / "bad_order.xml").string());
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("HANDS_FULL") != std::string::npos);
  CHECK(result.output.find("goal NOT satisfied") != std::string::npos);
}

TEST_CASE("exec: several candidates are reported in sorted order") {
  fs::path dir = testing::fresh_dir("cli_exec_batch");
  testing::write_file(dir / "a.xml", testing::teapot_xml());
  testing::write_file(dir / "b.xml", testing::teapot_xml());
  testing::write_file(dir / "c.xml", kStackTree);
  RunResult result = run(
      "--format records exec --task " + tasks_dir() +
      "/placing_teapot_on_stove.json " + (dir / "c.xml").string() + " " +
      (dir / "a.xml").string() + " " + (dir / "b.xml").string());
  CHECK(result.exit_code == 1);  // c.xml cannot satisfy the goal
  std::vector<nlohmann::json> records;
  std::istringstream lines(result.output);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.front() == '{') {
      records.push_back(nlohmann::json::parse(line));
    }
  }
  REQUIRE(records.size() == 3);
  CHECK(records[0]["file"].get<std::string>().find("a.xml") !=
        std::string::npos);
  CHECK(records[1]["file"].get<std::string>().find("b.xml") !=
        std::string::npos);
  CHECK(records[2]["file"].get<std::string>().find("c.xml") !=
        std::string::npos);
  CHECK(records[0]["goal_satisfied"] == true);
  CHECK(records[2]["goal_satisfied"] == false);
}

TEST_CASE("score: identical corpora score perfectly") {
  RunResult result =
      run("score --ref " + trees_dir() + " --hyp " + trees_dir());
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("struct match:   100.00%") != std::string::npos);
  CHECK(result.output.find("action jaccard: 1.0000 +/- 0.0000") !=
        std::string::npos);
  CHECK(result.output.find("bleu:           1.0000") != std::string::npos);
}

TEST_CASE("score: unmatched files warn and are excluded") {
  fs::path ref = testing::fresh_dir("cli_score_ref");
  fs::path hyp = testing::fresh_dir("cli_score_hyp");
  testing::write_file(ref / "a.xml", testing::teapot_xml());
  testing::write_file(ref / "only_ref.xml", testing::teapot_xml());
  testing::write_file(hyp / "a.xml", testing::teapot_xml());
  testing::write_file(hyp / "only_hyp.xml", testing::teapot_xml());
  RunResult result =
      run("score --ref " + ref.string() + " --hyp " + hyp.string());
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("warning: no hypothesis for only_ref.xml") !=
        std::string::npos);
  CHECK(result.output.find("warning: no reference for only_hyp.xml") !=
        std::string::npos);
  CHECK(result.output.find("pairs:          1") != std::string::npos);
}

TEST_CASE("score: an unparseable hypothesis still gets lexical scores") {
  fs::path ref = testing::fresh_dir("cli_score_prose_ref");
  fs::path hyp = testing::fresh_dir("cli_score_prose_hyp");
  testing::write_file(ref / "a.xml", testing::teapot_xml());
  testing::write_file(hyp / "a.xml", "<root>Sequence NAVIGATE_TO teapot");
  RunResult result = run("--format records score --ref " + ref.string() +
                         " --hyp " + hyp.string());
  CHECK(result.exit_code == 0);
  std::istringstream lines(result.output);
  std::string line;
  REQUIRE(std::getline(lines, line));
  nlohmann::json record = nlohmann::json::parse(line);
  CHECK(record["hyp_parses"] == false);
  CHECK(record["struct_match"] == 0);
  CHECK(record["action_jaccard"] == 0.0);
  CHECK(record["bleu"].get<double>() > 0.0);  // shares tokens with the ref
}

TEST_CASE("exec warns when a task allows inert primitives") {
  fs::path dir = testing::fresh_dir("cli_inert");
  testing::write_file(dir / "task.json", R"({
    "task_id": "inert_demo", "difficulty": "Easy",
    "instruction": "wait around",
    "objects": [{"id": "cup"}],
    "goal": [],
    "allowed_actions": ["NAVIGATE_TO", "WAIT"]
  })");
  testing::write_file(dir / "plan.xml",
                      R"(<root main_tree_to_execute="T"><BehaviorTree ID="T">
        <Action ID="NAVIGATE_TO" obj="cup"/>
      </BehaviorTree></root>)");
  RunResult result = run("exec --task " + (dir / "task.json").string() + " " +
                         (dir / "plan.xml").string());
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("warning: inert_demo allows WAIT") !=
        std::string::npos);
}

TEST_CASE("score: empty intersection is a usage error") {
  fs::path ref = testing::fresh_dir("cli_score_empty_ref");
  fs::path hyp = testing::fresh_dir("cli_score_empty_hyp");
  testing::write_file(ref / "a.xml", testing::teapot_xml());
  testing::write_file(hyp / "b.xml", testing::teapot_xml());
  RunResult result =
      run("score --ref " + ref.string() + " --hyp " + hyp.string());
  CHECK(result.exit_code == 2);
}

TEST_CASE("suite: precomputed outputs aggregate BT-Valid, SR and Pass@k") {
  fs::path outputs = testing::fresh_dir("cli_suite_outputs");
  std::vector<std::string> task_ids;
  for (const auto& entry : fs::directory_iterator(tasks_dir())) {
    if (entry.path().extension() == ".json") {
      task_ids.push_back(entry.path().stem().string());
    }
  }
  REQUIRE(task_ids.size() == 7);
  std::sort(task_ids.begin(), task_ids.end());
  for (const std::string& id : task_ids) {
    fs::create_directories(outputs / id);
    std::string reference =
        testing::read_file(testing::data_dir() / "trees" / (id + ".xml"));
    if (id == task_ids.front()) {
      // First task: invalid first attempt, recovery on the second.
      testing::write_file(outputs / id / "attempt_1.xml", kStackTree);
      testing::write_file(outputs / id / "attempt_2.xml", reference);
    } else {
      testing::write_file(outputs / id / "attempt_1.xml", reference);
      testing::write_file(outputs / id / "attempt_2.xml", kStackTree);
    }
  }
  RunResult result = run("suite --tasks " + tasks_dir() + " --outputs " +
                         outputs.string() + " --attempts 2");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("BT valid: 86%") != std::string::npos);
  CHECK(result.output.find("SR:       86%") != std::string::npos);
  CHECK(result.output.find("Pass@2:   100%") != std::string::npos);
}

TEST_CASE("suite: all-invalid candidates give zero rates") {
  fs::path outputs = testing::fresh_dir("cli_suite_invalid");
  for (const auto& entry : fs::directory_iterator(tasks_dir())) {
    if (entry.path().extension() != ".json") continue;
    std::string id = entry.path().stem().string();
    fs::create_directories(outputs / id);
    testing::write_file(outputs / id / "attempt_1.xml", "</Sequence> oops");
  }
  RunResult result = run("suite --tasks " + tasks_dir() + " --outputs " +
                         outputs.string() + " --attempts 1");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("BT valid: 0%") != std::string::npos);
  CHECK(result.output.find("SR:       0%") != std::string::npos);
}

TEST_CASE("suite: a missing attempt file is RaggedAttempts") {
  fs::path outputs = testing::fresh_dir("cli_suite_ragged");
  for (const auto& entry : fs::directory_iterator(tasks_dir())) {
    if (entry.path().extension() != ".json") continue;
    std::string id = entry.path().stem().string();
    fs::create_directories(outputs / id);
    testing::write_file(outputs / id / "attempt_1.xml", testing::teapot_xml());
  }
  fs::remove(outputs / "turning_on_radio" / "attempt_1.xml");
  RunResult result = run("suite --tasks " + tasks_dir() + " --outputs " +
                         outputs.string() + " --attempts 1");
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("RaggedAttempts") != std::string::npos);
}

TEST_CASE("suite: the built-in mock solves the bundled tasks from CoT") {
  RunResult result =
      run("suite --tasks " + tasks_dir() + " --generator-mock --attempts 1");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("SR:       100%") != std::string::npos);
  // Zero-shot strips the workflow; the plain template mock cannot solve the
  // hard tasks.
  RunResult zero_shot = run("suite --tasks " + tasks_dir() +
                            " --generator-mock --attempts 1 --zero-shot");
  CHECK(zero_shot.exit_code == 0);
  CHECK(zero_shot.output.find("SR:       100%") == std::string::npos);
}

TEST_CASE("suite: candidates can come from an HTTP generator") {
  fs::path tasks = testing::fresh_dir("cli_suite_http_tasks");
  fs::copy_file(testing::data_dir() / "tasks" / "placing_teapot_on_stove.json",
                tasks / "placing_teapot_on_stove.json");

  httplib::Server server;
  int calls = 0;
  server.Post("/gen", [&](const httplib::Request&, httplib::Response& res) {
    ++calls;
    res.set_content(testing::read_file(testing::data_dir() / "trees" /
                                       "placing_teapot_on_stove.xml"),
                    "text/plain");
  });
  int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread server_thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  RunResult result = run("suite --tasks " + tasks.string() +
                         " --generator-url http://127.0.0.1:" +
                         std::to_string(port) + "/gen --attempts 2");
  server.stop();
  server_thread.join();

  CHECK(result.exit_code == 0);
  CHECK(calls == 2);
  CHECK(result.output.find("SR:       100%") != std::string::npos);
}

TEST_CASE("dataset: builds a store through the command transport") {
  // Two tiny episodes.
  fs::path sources = testing::fresh_dir("cli_dataset_sources");
  for (int e = 0; e < 2; ++e) {
    fs::path dir = sources / ("ep" + std::to_string(e));
    fs::create_directories(dir);
    for (int f = 0; f < 12; ++f) {
      char name[32];
      std::snprintf(name, sizeof(name), "frame_%06d.png", f);
      dataset::Image image(8, 6);
      image.at(f % 8, e)[0] = 200;
      dataset::save_png(image, dir / name);
    }
    testing::write_file(dir / "meta",
                        "{\"instruction\": \"Place the teapot on the stove\"}");
  }
  fs::path state = testing::fresh_dir("cli_dataset_state");
  fs::path out = testing::fresh_dir("cli_dataset_out");
  // The first architect call hallucinates STACK; the retry loop recovers.
  std::string generator =
      std::string("'") + BTFORGE_MOCKGEN + " " + state.string() + " 1'";
  RunResult result = run("dataset --sources " + sources.string() + " --out " +
                         out.string() + " --stride 3 --seed 11 " +
                         "--generator-cmd " + generator);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("base records:       2") != std::string::npos);
  CHECK(fs::exists(out / "manifest.jsonl"));
  CHECK(fs::exists(out / "records"));
  // Retry happened: 2 episodes, one extra architect call.
  CHECK(testing::read_file(state / "architect_calls") == "3");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("validate").exit_code == 2);          // missing files
  CHECK(run("frobnicate x").exit_code == 2);      // unknown subcommand
  CHECK(run("exec --task /nope.json x.xml").exit_code == 2);
  CHECK(run("suite --tasks " + tasks_dir() + " --attempts 1").exit_code == 2);
  CHECK(run("dataset --sources /tmp --out /tmp/nowhere").exit_code == 2);
  CHECK(run("suite --tasks " + tasks_dir() +
            " --generator-mock --generator-cmd cat").exit_code == 2);
}

}  // TEST_SUITE
