#pragma once

#include <stdexcept>
#include <string>

namespace hq {

// Every failure raised by the library carries a machine-readable kind
// (e.g. "StepBudgetExceeded", "NotNormal") next to the human message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

}  // namespace hq
