#pragma once

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(SBINET_FIXTURES) / name;
}

struct RunResult {
  int exit_code = -1;
  std::string out;  // stdout only
};

// Runs the CLI with the given argument string; stderr is discarded.
inline RunResult run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + SBINET_CLI + "\" " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string pair_args(const std::string& nodes, const std::string& edges) {
  return "--nodes \"" + fixture(nodes).string() + "\" --edges \"" + fixture(edges).string() + "\"";
}

// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() /
             ("sbinet-test-" + std::to_string(::getpid()) + "-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace testing
