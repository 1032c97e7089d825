#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace shortc2 {

// Failure with a stable machine-readable code alongside the human message.
// Codes are the contract used by the CLI to pick exit statuses; see
// Error::exit_code for the mapping.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

    // 2 = invalid input or configuration, 4 = undecided where a decision
    // was required. Verification failures (exit 3) are not exceptions;
    // they are reported results.
    int exit_code() const noexcept {
        if (code_ == "undecided" || code_ == "endpoint-undecided" ||
            code_ == "path-leaves-Uplus")
            return 4;
        return 2;
    }

private:
    std::string code_;
};

} // namespace shortc2
