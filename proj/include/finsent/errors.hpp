#pragma once

#include <stdexcept>
#include <string>

namespace finsent {

// Every failure the library reports carries a Kind so callers (and the CLI
// exit-code mapping) can react without string matching.
enum class ErrorKind {
    // configuration / input problems (CLI exit code 2)
    IoError,
    MalformedLine,
    InvalidDate,
    EmptyLexicon,
    ConfigError,
    // computational problems (CLI exit code 1)
    InvalidArgument,
    EmptyIntersection,
    ZeroVariance,
    NonPositiveValue,
    InsufficientLength,
    InsufficientHistory,
    RankDeficient,
    NoTermsSelected,
    LengthMismatch,
    ZeroActual,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    // true for problems with user-supplied files/configuration
    bool is_input_error() const noexcept {
        switch (kind_) {
        case ErrorKind::IoError:
        case ErrorKind::MalformedLine:
        case ErrorKind::InvalidDate:
        case ErrorKind::EmptyLexicon:
        case ErrorKind::ConfigError:
            return true;
        default:
            return false;
        }
    }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace finsent
