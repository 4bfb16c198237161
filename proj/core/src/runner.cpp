#include <vendokit/bench.hpp>

#include <cerrno>
#include <chrono>
#include <csignal>
#include <fcntl.h>
#include <poll.h>
#include <spawn.h>
#include <sys/syscall.h>
#include <sys/wait.h>
#include <thread>
#include <unistd.h>

extern char** environ;

namespace vendokit {

namespace {

using Clock = std::chrono::steady_clock;

struct Invocation {
    int status = 0;
    double seconds = 0.0;
};

class SpawnActions {
public:
    SpawnActions() {
        posix_spawn_file_actions_init(&_actions);
        posix_spawn_file_actions_addopen(&_actions, STDIN_FILENO, "/dev/null", O_RDONLY, 0);
        posix_spawn_file_actions_addopen(&_actions, STDOUT_FILENO, "/dev/null", O_WRONLY, 0);
        posix_spawn_file_actions_addopen(&_actions, STDERR_FILENO, "/dev/null", O_WRONLY, 0);
    }
    ~SpawnActions() { posix_spawn_file_actions_destroy(&_actions); }
    SpawnActions(const SpawnActions&) = delete;
    SpawnActions& operator=(const SpawnActions&) = delete;

    const posix_spawn_file_actions_t* get() const noexcept { return &_actions; }

private:
    posix_spawn_file_actions_t _actions;
};

int decode_status(int wstatus) noexcept {
    if (WIFEXITED(wstatus)) return WEXITSTATUS(wstatus);
    if (WIFSIGNALED(wstatus)) return 128 + WTERMSIG(wstatus);
    return -1;
}

/// Waits for `pid` until `deadline`. Returns false on timeout (child still running).
bool wait_until(pid_t pid, Clock::time_point deadline, int& wstatus) {
    const int pidfd = static_cast<int>(::syscall(SYS_pidfd_open, pid, 0));
    if (pidfd >= 0) {
        pollfd pfd{pidfd, POLLIN, 0};
        while (true) {
            const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
            if (left.count() <= 0) {
                ::close(pidfd);
                return false;
            }
            const int rc = ::poll(&pfd, 1, static_cast<int>(std::min<long long>(left.count(), 1000)));
            if (rc > 0) break;
            if (rc < 0 && errno != EINTR) break;
        }
        ::close(pidfd);
        while (::waitpid(pid, &wstatus, 0) < 0 && errno == EINTR) {}
        return true;
    }
    // No pidfd support: poll with a short sleep.
    while (true) {
        const pid_t r = ::waitpid(pid, &wstatus, WNOHANG);
        if (r == pid) return true;
        if (Clock::now() >= deadline) return false;
        std::this_thread::sleep_for(std::chrono::microseconds(200));
    }
}

Invocation invoke(const std::string& command, Role side, Clock::time_point deadline,
                  const SpawnActions& actions) {
    const char* argv[] = {"sh", "-c", command.c_str(), nullptr};
    pid_t pid = 0;
    const auto start = Clock::now();
    const int rc = ::posix_spawn(&pid, "/bin/sh", actions.get(), nullptr,
                                 const_cast<char* const*>(argv), environ);
    if (rc != 0) {
        throw CommandFailedError(side, 127, command);
    }
    int wstatus = 0;
    if (!wait_until(pid, deadline, wstatus)) {
        ::kill(pid, SIGKILL);
        while (::waitpid(pid, &wstatus, 0) < 0 && errno == EINTR) {}
        throw Error(Errc::Timeout, std::string(to_string(side)) + " command exceeded its time cap: " + command);
    }
    const auto stop = Clock::now();
    Invocation inv;
    inv.status = decode_status(wstatus);
    inv.seconds = std::chrono::duration<double>(stop - start).count();
    if (inv.status != 0) {
        throw CommandFailedError(side, inv.status, command);
    }
    return inv;
}

}  // namespace

CommandFailedError::CommandFailedError(Role side, int status, const std::string& command)
    : Error(Errc::CommandFailed, std::string(to_string(side)) + " command failed with status " +
                                     std::to_string(status) + ": " + command),
      _side(side),
      _status(status) {}

PairedRun run_paired(const std::string& subject_cmd, const std::string& reference_cmd,
                     const Calibration& calibration, const std::string& group) {
    const SpawnActions actions;
    const auto cap = std::chrono::duration_cast<Clock::duration>(
        std::chrono::duration<double>(calibration.timeout_seconds));

    struct Side {
        const std::string* command;
        Role role;
        Clock::duration spent{};
        double measured = 0.0;
        std::vector<double> samples;
    };
    Side subject{&subject_cmd, Role::subject, {}, 0.0, {}};
    Side reference{&reference_cmd, Role::reference, {}, 0.0, {}};

    auto run_once = [&](Side& s) {
        const auto begin = Clock::now();
        const auto inv = invoke(*s.command, s.role, begin + (cap - s.spent), actions);
        s.spent += Clock::now() - begin;
        return inv.seconds;
    };

    run_once(subject);  // warmups, discarded
    run_once(reference);

    auto done = [&] {
        return subject.samples.size() >= calibration.min_rounds &&
               reference.samples.size() >= calibration.min_rounds &&
               subject.measured >= calibration.target_seconds &&
               reference.measured >= calibration.target_seconds;
    };
    while (!done()) {
        for (Side* s : {&subject, &reference}) {
            const double t = run_once(*s);
            s->samples.push_back(t);
            s->measured += t;
        }
    }

    PairedRun out;
    out.subject = summarize_samples(subject.samples);
    out.reference = summarize_samples(reference.samples);
    out.paired.group = group;
    out.paired.module = group.substr(0, group.find('/'));
    out.paired.t_ref = out.reference.mean;
    out.paired.t_subject = out.subject.mean;
    out.paired.ratio = out.paired.t_ref / out.paired.t_subject;

    const std::vector<BenchmarkRecord> records{
        {group, "test_zerodep", Role::subject, out.subject, out.paired.module, {}},
        {group, "test_reference", Role::reference, out.reference, out.paired.module, {}},
    };
    out.results_document = write_results(records);
    return out;
}

}  // namespace vendokit
