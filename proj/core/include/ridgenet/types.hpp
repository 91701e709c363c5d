#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ridgenet {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

/// Raised for operations that are declared but deliberately unsupported
/// (e.g. asking for the derivative of the linear activation).
class NotImplementedError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// I/O failure: unreadable, unwritable or malformed file.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One step of a numerical trace: a cutoff and the partial integral there.
struct TraceEntry {
    double cutoff = 0.0;
    cplx partial{};
    double partial_abs = 0.0;
};

/// The inner-cutoff sequence did not settle into either a convergent or a
/// divergent pattern.
class IndeterminateError : public std::runtime_error {
public:
    IndeterminateError(const std::string& what, std::vector<TraceEntry> trace)
        : std::runtime_error(what), trace_(std::move(trace)) {}
    const std::vector<TraceEntry>& trace() const noexcept { return trace_; }

private:
    std::vector<TraceEntry> trace_;
};

/// No admissible ridgelet was found (or a requested pair is not admissible).
/// `attempts` lists one human readable line per candidate tried.
class ConstructionFailed : public std::runtime_error {
public:
    ConstructionFailed(const std::string& what, std::vector<std::string> attempts)
        : std::runtime_error(what), attempts_(std::move(attempts)) {}
    const std::vector<std::string>& attempts() const noexcept { return attempts_; }

private:
    std::vector<std::string> attempts_;
};

}  // namespace ridgenet
