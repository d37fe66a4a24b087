// Copyright 2026 The roelcke Authors
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

#ifndef ROELCKE_TESTS_CLI_HARNESS_HPP
#define ROELCKE_TESTS_CLI_HARNESS_HPP

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "dispatch.hpp"

namespace roelcke::testing {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

// Runs commands in-process against fixture files in a private directory.
class CliSandbox {
 public:
  CliSandbox() {
    static std::atomic<int> counter{0};
    dir_ = std::filesystem::temp_directory_path() /
           ("roelcke-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(dir_);
  }
  ~CliSandbox() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  CliSandbox(const CliSandbox&) = delete;
  CliSandbox& operator=(const CliSandbox&) = delete;

  std::string write(const std::string& name, const std::string& text) const {
    const auto path = (dir_ / name).string();
    std::ofstream(path, std::ios::binary) << text;
    return path;
  }
  std::string read(const std::string& path) const {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  CliResult run(const std::vector<std::string>& args, const std::string& stdin_text = "") const {
    std::ostringstream out, err;
    std::istringstream in(stdin_text);
    CliResult r;
    r.code = cli::run(args, out, err, in);
    r.out = out.str();
    r.err = err.str();
    return r;
  }

 private:
  std::filesystem::path dir_;
};

struct ExitCase {
  std::string name;
  std::vector<std::string> args;
  int expected;
};

// One row per (subcommand, outcome). Fixture names refer to files written
// by write_fixtures.
inline void write_fixtures(const CliSandbox& box) {
  box.write("r.rel", "rel 2\n0 1\n1 0\n");
  box.write("s.rel", "rel 2\n0 0\n0 1\n1 0\n");
  box.write("r3.rel", "rel 3\n0 0\n1 1\n2 2\n");
  box.write("noe0.rel", "rel 2\n0 0\n0 1\n");
  box.write("bad.rel", "rel 2\n0 1\n1 7\n");
  box.write("set.rels", "rel 2\n0 1\n1 0\n\nrel 2\n0 0\n1 1\n");
  box.write("open.rels", "rel 2\n0 1\n1 0\n");
  box.write("mixed.rels", "rel 2\n0 0\n1 1\n\nrel 1\n0 0\n");
  box.write("swap.pm", "pm\n0 -> 1\n1 -> 0\n");
  box.write("f.pm", "pm\n00 -> 0\n01 -> 10\n1 -> 11\n");
  box.write("g.pm", "pm\n00 -> 10\n01 -> 11\n10 -> 00\n11 -> 01\n");
  box.write("id.pm", "pm\ne -> e\n");
  box.write("deep.pm", "pm\n0000000000000 -> 1\n01 -> 01\n001 -> 001\n0001 -> 0001\n00001 -> 00001\n000001 -> 000001\n0000001 -> 0000001\n00000001 -> 00000001\n000000001 -> 000000001\n0000000001 -> 0000000001\n00000000001 -> 00000000001\n000000000001 -> 000000000001\n0000000000001 -> 0000000000001\n1 -> 0000000000000\n");
  box.write("bad.pm", "pm\n0 -> 1\n");
  box.write("p.part", "part\nblock: 0 11\nblock: 10\n");
  box.write("big.part", "part\nblock: 000\nblock: 001\nblock: 010\nblock: 011\nblock: 1\n");
  box.write("bad.part", "part\nblock: 0\n");
  box.write("u00.clopen", "clopen\n00\n");
  box.write("u01.clopen", "clopen\n01\n");
  box.write("u0.clopen", "clopen\n0\n");
  box.write("u1.clopen", "clopen\n1\n");
  box.write("u10.clopen", "clopen\n10\n");
  box.write("u11.clopen", "clopen\n11\n");
  box.write("empty.clopen", "clopen\n");
  box.write("bad.clopen", "clopen\n0\n01\n");
  box.write("c1.tower", "tower clopen 1\n0 0\n0 1\n1 0\n");
  box.write("c2.tower", "tower clopen 1\n0 1\n1 0\n1 1\n");
  box.write("swap.tower", "tower graph\n0 -> 1\n1 -> 0\n");
  box.write("id.tower", "tower graph\ne -> e\n");
    box.write("bad.tower", "tower clopen 1\n0 0\n");
}

inline std::vector<ExitCase> exit_matrix(const CliSandbox& box) {
  auto p = [&](const char* n) { return box.path(n); };
  return {
      {"rel compose ok", {"rel", "compose", p("r.rel"), p("s.rel")}, 0},
      {"rel compose size mismatch", {"rel", "compose", p("r.rel"), p("r3.rel")}, 1},
      {"rel compose syntax", {"rel", "compose", p("bad.rel"), p("s.rel")}, 1},
      {"rel compose missing file", {"rel", "compose", p("nope.rel"), p("s.rel")}, 1},
      {"rel compose wrong kind", {"rel", "compose", p("swap.pm"), p("s.rel")}, 1},
      {"rel transpose ok", {"rel", "transpose", p("r.rel")}, 0},
      {"rel transpose syntax", {"rel", "transpose", p("bad.rel")}, 1},
      {"rel classify ok", {"rel", "classify", p("noe0.rel")}, 0},
      {"rel classify syntax", {"rel", "classify", p("bad.rel")}, 1},
      {"rel enum ok", {"rel", "enum", "--size", "2"}, 0},
      {"rel enum over cap", {"rel", "enum", "--size", "5"}, 3},
      {"rel enum lowered cap", {"rel", "enum", "--size", "3", "--cap", "2"}, 3},
      {"rel enum missing size", {"rel", "enum"}, 1},
      {"rel closure ok", {"rel", "closure", p("set.rels")}, 0},
      {"rel closure over cap", {"rel", "closure", p("set.rels"), "--cap", "1"}, 3},
      {"rel closure mixed sizes", {"rel", "closure", p("mixed.rels")}, 1},
      {"rel greatest-idem ok", {"rel", "greatest-idem", p("set.rels")}, 0},
      {"rel greatest-idem not closed", {"rel", "greatest-idem", p("open.rels")}, 1},
      {"rel invariants ok", {"rel", "invariants", "--size", "3"}, 0},
      {"rel invariants over cap", {"rel", "invariants", "--size", "6"}, 3},
      {"homeo compose ok", {"homeo", "compose", p("f.pm"), p("swap.pm")}, 0},
      {"homeo compose invalid", {"homeo", "compose", p("bad.pm"), p("swap.pm")}, 1},
      {"homeo invert ok", {"homeo", "invert", p("f.pm")}, 0},
      {"homeo invert invalid", {"homeo", "invert", p("bad.pm")}, 1},
      {"homeo trace ok", {"homeo", "trace", p("f.pm"), "--level", "1"}, 0},
      {"homeo trace partition", {"homeo", "trace", p("f.pm"), "--partition", p("p.part")}, 0},
      {"homeo trace bad partition", {"homeo", "trace", p("f.pm"), "--partition", p("bad.part")}, 1},
      {"homeo trace no partition", {"homeo", "trace", p("f.pm")}, 1},
      {"homeo trace both partitions", {"homeo", "trace", p("f.pm"), "--level", "1", "--partition", p("p.part")}, 1},
      {"homeo trace level over cap", {"homeo", "trace", p("f.pm"), "--level", "30"}, 3},
      {"homeo image ok", {"homeo", "image", p("f.pm"), p("u0.clopen")}, 0},
      {"homeo image invalid", {"homeo", "image", p("f.pm"), p("bad.clopen")}, 1},
      {"homeo stab ok", {"homeo", "stab", p("swap.pm"), "--level", "1"}, 0},
      {"homeo stab invalid", {"homeo", "stab", p("bad.pm"), "--level", "1"}, 1},
      {"homeo supdist ok", {"homeo", "supdist", p("f.pm"), p("swap.pm")}, 0},
      {"homeo supdist invalid", {"homeo", "supdist", p("f.pm"), p("bad.pm")}, 1},
      {"homeo mapclopen ok", {"homeo", "mapclopen", p("u0.clopen"), p("u1.clopen")}, 0},
      {"homeo mapclopen empty", {"homeo", "mapclopen", p("empty.clopen"), p("u1.clopen")}, 1},
      {"tower trace ok", {"tower", "trace", p("c1.tower"), "--level", "2"}, 0},
      {"tower trace invalid", {"tower", "trace", p("bad.tower"), "--level", "2"}, 1},
      {"tower trace over cap", {"tower", "trace", p("c1.tower"), "--level", "13"}, 3},
      {"tower involute ok", {"tower", "involute", p("c1.tower")}, 0},
      {"tower involute invalid", {"tower", "involute", p("bad.tower")}, 1},
      {"tower compose ok", {"tower", "compose", p("c1.tower"), p("c2.tower")}, 0},
      {"tower compose approximate", {"tower", "compose", p("swap.tower"), p("c2.tower"), "--approximate", "--budget", "3"}, 0},
      {"tower compose budget over cap", {"tower", "compose", p("c1.tower"), p("c2.tower"), "--budget", "13"}, 3},
      {"tower compose invalid", {"tower", "compose", p("bad.tower"), p("c2.tower")}, 1},
      {"tower translate ok", {"tower", "translate", p("swap.pm"), p("c1.tower"), "--side", "right"}, 0},
      {"tower translate bad side", {"tower", "translate", p("swap.pm"), p("c1.tower"), "--side", "up"}, 1},
      {"tower translate too deep", {"tower", "translate", p("deep.pm"), p("c1.tower")}, 3},
      {"tower same-nbhd ok", {"tower", "same-nbhd", p("id.tower"), p("swap.tower"), "--level", "1"}, 0},
      {"tower same-nbhd invalid", {"tower", "same-nbhd", p("id.tower"), p("bad.tower"), "--level", "1"}, 1},
      {"tower hausdorff ok", {"tower", "hausdorff", p("id.tower"), p("swap.tower"), "--level", "1"}, 0},
      {"tower hausdorff no level", {"tower", "hausdorff", p("id.tower"), p("swap.tower")}, 1},
      {"tower hausdorff over cap", {"tower", "hausdorff", p("id.tower"), p("swap.tower"), "--level", "13"}, 3},
      {"tower check ok", {"tower", "check", p("c1.tower"), "--level", "5"}, 0},
      {"tower check over cap", {"tower", "check", p("c1.tower"), "--level", "20"}, 3},
      {"realize ok", {"realize", p("s.rel"), "--level", "1"}, 0},
      {"realize not e0", {"realize", p("noe0.rel"), "--level", "1"}, 1},
      {"realize size mismatch", {"realize", p("r3.rel"), "--level", "1"}, 1},
      {"realize-pair ok", {"realize-pair", p("r.rel"), p("s.rel"), "--level", "1"}, 0},
      {"realize-pair not e0", {"realize-pair", p("noe0.rel"), p("s.rel"), "--level", "1"}, 1},
      {"coset-witness ok", {"coset-witness", p("swap.pm"), p("g.pm"), "--level", "1"}, 0},
      {"coset-witness unequal traces", {"coset-witness", p("f.pm"), p("g.pm"), "--level", "1"}, 2},
      {"coset-witness invalid", {"coset-witness", p("bad.pm"), p("g.pm"), "--level", "1"}, 1},
      {"net ok", {"net", "--level", "1"}, 0},
      {"net over cap", {"net", "--partition", p("big.part")}, 3},
      {"cluster ok", {"cluster", p("c1.tower"), p("c2.tower"), "--level", "1"}, 0},
      {"cluster invalid", {"cluster", p("bad.tower"), p("c2.tower"), "--level", "1"}, 1},
      {"cluster over cap", {"cluster", p("c1.tower"), p("c2.tower"), "--level", "13"}, 3},
      {"witness dense-orbit ok", {"witness", "dense-orbit", p("u00.clopen"), p("u01.clopen"), p("u10.clopen"), p("u11.clopen")}, 0},
      {"witness dense-orbit precondition", {"witness", "dense-orbit", p("u0.clopen"), p("u1.clopen"), p("u10.clopen"), p("u11.clopen")}, 2},
      {"witness dense-orbit invalid", {"witness", "dense-orbit", p("bad.clopen"), p("u1.clopen"), p("u10.clopen"), p("u11.clopen")}, 1},
      {"witness conjugation ok", {"witness", "conjugation", p("swap.pm"), p("u00.clopen"), p("u01.clopen")}, 0},
      {"witness conjugation precondition", {"witness", "conjugation", p("id.pm"), p("u0.clopen"), p("u1.clopen")}, 2},
      {"witness conjugation invalid", {"witness", "conjugation", p("bad.pm"), p("u0.clopen"), p("u1.clopen")}, 1},
      {"unknown command", {"frobnicate"}, 1},
      {"unknown subcommand", {"rel", "frobnicate"}, 1},
      {"no command", {}, 1},
      {"help", {"--help"}, 0},
  };
}

}  // namespace roelcke::testing

#endif  // ROELCKE_TESTS_CLI_HARNESS_HPP
