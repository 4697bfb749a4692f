#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace oddhole {

/// Input that violates a format or a parameter precondition.
class MalformedInput : public std::runtime_error {
public:
    explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an exhaustive search runs out of node expansions.
class SearchBudgetExceeded : public std::runtime_error {
public:
    SearchBudgetExceeded(std::uint64_t limit, const std::string& where)
        : std::runtime_error("search budget of " + std::to_string(limit) +
                             " expansions exhausted in " + where),
          limit_(limit) {}

    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t limit_;
};

/// Two vertex sets that lie in different components.
class NoConnection : public std::runtime_error {
public:
    explicit NoConnection(const std::string& what) : std::runtime_error(what) {}
};

/// Rejection sampling gave up.
class ExhaustedAttempts : public std::runtime_error {
public:
    explicit ExhaustedAttempts(const std::string& what) : std::runtime_error(what) {}
};

/// Counts node expansions across one logical search. Not thread-safe; give
/// every worker its own budget.
class SearchBudget {
public:
    static constexpr std::uint64_t kDefaultLimit = 100'000'000;

    explicit SearchBudget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

    void charge(const char* where, std::uint64_t amount = 1) {
        used_ += amount;
        if (used_ > limit_) throw SearchBudgetExceeded(limit_, where);
    }

    std::uint64_t used() const noexcept { return used_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

}  // namespace oddhole
