// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#include "logrev/process.hpp"

#include <fcntl.h>
#include <poll.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <csignal>
#include <cstring>

#include "logrev/error.hpp"

extern char** environ;

namespace logrev {

namespace {

struct Pipe {
  int fds[2] = {-1, -1};
  Pipe() {
    if (::pipe2(fds, O_CLOEXEC) != 0) throw IoError(std::string("pipe: ") + std::strerror(errno));
  }
  ~Pipe() {
    for (int fd : fds)
      if (fd >= 0) ::close(fd);
  }
  int release(int which) {
    const int fd = fds[which];
    fds[which] = -1;
    return fd;
  }
};

std::vector<char*> make_argv(const std::vector<std::string>& argv) {
  std::vector<char*> out;
  out.reserve(argv.size() + 1);
  for (const auto& a : argv) out.push_back(const_cast<char*>(a.c_str()));
  out.push_back(nullptr);
  return out;
}

class FileActions {
 public:
  FileActions() { posix_spawn_file_actions_init(&fa_); }
  ~FileActions() { posix_spawn_file_actions_destroy(&fa_); }
  posix_spawn_file_actions_t* get() { return &fa_; }

 private:
  posix_spawn_file_actions_t fa_;
};

int spawn(const std::vector<std::string>& argv, const std::optional<std::string>& working_dir,
          FileActions& actions) {
  if (working_dir) posix_spawn_file_actions_addchdir_np(actions.get(), working_dir->c_str());
  auto cargv = make_argv(argv);
  pid_t pid = -1;
  const int rc = posix_spawnp(&pid, cargv[0], actions.get(), nullptr, cargv.data(), environ);
  if (rc != 0) throw IoError("cannot start " + argv[0] + ": " + std::strerror(rc));
  return pid;
}

int wait_for(int pid) {
  int status = 0;
  while (::waitpid(pid, &status, 0) < 0) {
    if (errno != EINTR) return -1;
  }
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return 128 + (WIFSIGNALED(status) ? WTERMSIG(status) : 0);
}

void ignore_sigpipe() {
  static const bool once = [] {
    std::signal(SIGPIPE, SIG_IGN);
    return true;
  }();
  (void)once;
}

}  // namespace

ProcessResult run_process(const std::vector<std::string>& argv,
                          const std::optional<std::string>& working_dir,
                          const std::string& stdin_data) {
  ignore_sigpipe();
  Pipe in, out, err;
  FileActions actions;
  posix_spawn_file_actions_adddup2(actions.get(), in.fds[0], STDIN_FILENO);
  posix_spawn_file_actions_adddup2(actions.get(), out.fds[1], STDOUT_FILENO);
  posix_spawn_file_actions_adddup2(actions.get(), err.fds[1], STDERR_FILENO);
  const int pid = spawn(argv, working_dir, actions);
  ::close(in.release(0));
  ::close(out.release(1));
  ::close(err.release(1));

  int in_fd = in.release(1);
  if (!stdin_data.empty()) {
    std::size_t written = 0;
    while (written < stdin_data.size()) {
      const ssize_t w = ::write(in_fd, stdin_data.data() + written, stdin_data.size() - written);
      if (w < 0) {
        if (errno == EINTR) continue;
        break;
      }
      written += static_cast<std::size_t>(w);
    }
  }
  ::close(in_fd);

  ProcessResult result;
  pollfd fds[2] = {{out.fds[0], POLLIN, 0}, {err.fds[0], POLLIN, 0}};
  std::string* sinks[2] = {&result.out, &result.err};
  int open = 2;
  char buf[65536];
  while (open > 0) {
    if (::poll(fds, 2, -1) < 0) {
      if (errno == EINTR) continue;
      break;
    }
    for (int k = 0; k < 2; ++k) {
      if (fds[k].fd < 0 || !(fds[k].revents & (POLLIN | POLLHUP | POLLERR))) continue;
      const ssize_t r = ::read(fds[k].fd, buf, sizeof buf);
      if (r > 0) {
        sinks[k]->append(buf, static_cast<std::size_t>(r));
      } else if (r == 0 || errno != EINTR) {
        fds[k].fd = -1;
        --open;
      }
    }
  }
  result.exit_code = wait_for(pid);
  return result;
}

PipeProcess::PipeProcess(const std::vector<std::string>& argv,
                         const std::optional<std::string>& working_dir) {
  ignore_sigpipe();
  Pipe in, out;
  FileActions actions;
  posix_spawn_file_actions_adddup2(actions.get(), in.fds[0], STDIN_FILENO);
  posix_spawn_file_actions_adddup2(actions.get(), out.fds[1], STDOUT_FILENO);
  posix_spawn_file_actions_addopen(actions.get(), STDERR_FILENO, "/dev/null", O_WRONLY, 0);
  pid_ = spawn(argv, working_dir, actions);
  ::close(in.release(0));
  ::close(out.release(1));
  in_fd_ = in.release(1);
  out_fd_ = out.release(0);
}

PipeProcess::~PipeProcess() {
  if (in_fd_ >= 0) ::close(in_fd_);
  if (out_fd_ >= 0) ::close(out_fd_);
  if (pid_ > 0) wait_for(pid_);
}

void PipeProcess::write(const std::string& data) {
  std::size_t written = 0;
  while (written < data.size()) {
    const ssize_t w = ::write(in_fd_, data.data() + written, data.size() - written);
    if (w < 0) {
      if (errno == EINTR) continue;
      throw IoError(std::string("pipe write: ") + std::strerror(errno));
    }
    written += static_cast<std::size_t>(w);
  }
}

void PipeProcess::fill() {
  if (pos_ > 0) {
    buffer_.erase(0, pos_);
    pos_ = 0;
  }
  char buf[65536];
  for (;;) {
    const ssize_t r = ::read(out_fd_, buf, sizeof buf);
    if (r > 0) {
      buffer_.append(buf, static_cast<std::size_t>(r));
      return;
    }
    if (r == 0) throw IoError("child process closed its output");
    if (errno != EINTR) throw IoError(std::string("pipe read: ") + std::strerror(errno));
  }
}

std::string PipeProcess::read_line() {
  for (;;) {
    const auto nl = buffer_.find('\n', pos_);
    if (nl != std::string::npos) {
      std::string line = buffer_.substr(pos_, nl - pos_);
      pos_ = nl + 1;
      return line;
    }
    fill();
  }
}

std::string PipeProcess::read_exact(std::size_t count) {
  while (buffer_.size() - pos_ < count) fill();
  std::string out = buffer_.substr(pos_, count);
  pos_ += count;
  return out;
}

}  // namespace logrev
