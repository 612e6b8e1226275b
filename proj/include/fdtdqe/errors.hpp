#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fdtdqe {

// Argument outside an operation's domain (bad spacing, out-of-grid sample...).
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A caller broke a documented precondition between collaborating modules.
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Frequency outside the band where a material model is declared valid.
struct OutOfBand : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Amplitude-spectrum denominator vanished on the frequency grid.
struct DegeneratePole : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inverse transform window too short: the amplitude has not decayed at the edge.
struct WindowTooShort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Population never crossed 1/e inside the recorded series.
struct InsufficientRun : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Field magnitude blew up during time stepping.
struct NumericAbort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Configuration problems. Carries every violation found, not only the first.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(std::vector<std::string> issues)
        : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

    const std::vector<std::string>& issues() const noexcept { return issues_; }

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out;
        for (const auto& s : v) {
            if (!out.empty()) out += '\n';
            out += s;
        }
        return out;
    }
    std::vector<std::string> issues_;
};

}  // namespace fdtdqe
