#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bihom {

// Exception carrying a stable machine-readable kind ("DivisionByZero",
// "ContextMismatch", ...) next to the human-readable message.  The kind is
// what tests and the CLI dispatch on; the message is for people.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

}  // namespace bihom
