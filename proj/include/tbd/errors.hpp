#pragma once

#include <stdexcept>
#include <string>

namespace tbd {

// Process exit codes used by the CLI. Library code throws the typed
// exceptions below; the CLI maps them to these codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitIo = 3,
    kExitPrecondition = 4,
};

/// Invalid configuration: bad key, bad value, inconsistent parameters.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem / format failures while reading or writing artifacts.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An operation was called outside its contract (sequencing, readiness,
/// domain violations, degenerate data).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tbd
