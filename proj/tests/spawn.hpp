#pragma once

// Spawns the CLI binary (path injected by the build as PN_CLI_PATH) through
// the shell and captures stdout plus the exit code. stderr is dropped; the
// tests only assert on stdout and exit codes.

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

struct CliResult {
  int exit_code = -1;
  std::string out;
};

inline CliResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd;
  if (!env.empty()) cmd += env + " ";
  cmd += PN_CLI_PATH;
  if (!args.empty()) cmd += " " + args;
  cmd += " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}
