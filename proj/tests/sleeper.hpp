#pragma once

#include <chrono>
#include <csignal>
#include <optional>
#include <sys/wait.h>
#include <thread>
#include <unistd.h>

#include "rguard/response_engine.hpp"

namespace rguard::testing {

// A child that sleeps until signalled. Reaped (and killed if still alive)
// on destruction.
class Sleeper {
public:
    Sleeper() {
        pid_ = ::fork();
        if (pid_ == 0) {
            ::execl("/bin/sleep", "sleep", "30", static_cast<char*>(nullptr));
            ::_exit(127);
        }
        // Wait until the exec has replaced the forked image.
        for (int i = 0; i < 500; ++i) {
            const auto id = read_process_identity(pid_);
            if (id && id->comm == "sleep") break;
            std::this_thread::sleep_for(std::chrono::milliseconds(2));
        }
    }
    ~Sleeper() {
        if (!reaped_) {
            ::kill(pid_, SIGKILL);
            ::waitpid(pid_, nullptr, 0);
        }
    }
    Pid pid() const { return pid_; }

    /// Waits up to `limit` for the child to die; returns its wait status.
    std::optional<int> wait_dead(std::chrono::milliseconds limit) {
        const auto deadline = std::chrono::steady_clock::now() + limit;
        int status = 0;
        while (std::chrono::steady_clock::now() < deadline) {
            if (::waitpid(pid_, &status, WNOHANG) == pid_) {
                reaped_ = true;
                return status;
            }
            std::this_thread::sleep_for(std::chrono::microseconds(200));
        }
        return std::nullopt;
    }

    bool stopped() {
        int status = 0;
        return ::waitpid(pid_, &status, WNOHANG | WUNTRACED) == pid_ && WIFSTOPPED(status);
    }

private:
    Pid pid_ = 0;
    bool reaped_ = false;
};

}  // namespace rguard::testing
