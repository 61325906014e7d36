// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace logrev {

struct ProcessResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

/// Runs argv[0] (PATH lookup) with the given arguments and captures both
/// output streams. Throws IoError if the process cannot be started.
ProcessResult run_process(const std::vector<std::string>& argv,
                          const std::optional<std::string>& working_dir = std::nullopt,
                          const std::string& stdin_data = {});

/// A long-lived child process spoken to over stdin/stdout pipes.
class PipeProcess {
 public:
  explicit PipeProcess(const std::vector<std::string>& argv,
                       const std::optional<std::string>& working_dir = std::nullopt);
  ~PipeProcess();
  PipeProcess(const PipeProcess&) = delete;
  PipeProcess& operator=(const PipeProcess&) = delete;

  void write(const std::string& data);
  /// Reads through the next '\n' (excluded). Throws IoError on EOF.
  std::string read_line();
  std::string read_exact(std::size_t count);

 private:
  void fill();

  int pid_ = -1;
  int in_fd_ = -1;
  int out_fd_ = -1;
  std::string buffer_;
  std::size_t pos_ = 0;
};

}  // namespace logrev
