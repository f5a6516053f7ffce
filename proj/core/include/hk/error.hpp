#pragma once

#include <stdexcept>
#include <string>

namespace hk {

// Domain error with a machine-readable clause string. The clause is what the
// CLI emits as {"error": clause}; keep clauses short, stable and lowercase.
class Error : public std::runtime_error {
public:
    Error(std::string clause, const std::string& detail)
        : std::runtime_error(detail.empty() ? clause : clause + ": " + detail),
          clause_(std::move(clause)) {}

    explicit Error(std::string clause) : Error(std::move(clause), "") {}

    const std::string& clause() const noexcept { return clause_; }

private:
    std::string clause_;
};

inline void require(bool cond, const char* clause, const std::string& detail = "") {
    if (!cond) throw Error(clause, detail);
}

}  // namespace hk
