#pragma once

#include <stdexcept>
#include <string>

namespace tga {

/// Thrown when an exhaustive operation would exceed its configured budget.
/// Carries the work count that would have been needed, so callers can report
/// an explicit refusal instead of a silent partial answer.
class BudgetError : public std::runtime_error {
  public:
    BudgetError(const std::string& what, const std::string& needed)
        : std::runtime_error(what + " (would need " + needed + ")"), needed_(needed) {}

    const std::string& needed() const { return needed_; }

  private:
    std::string needed_;
};

/// File parse failure with a "path:line:" prefix in the message.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& path, int line, const std::string& message)
        : std::runtime_error(path + ":" + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

  private:
    int line_;
};

}  // namespace tga
