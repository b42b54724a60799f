#pragma once

#include <stdexcept>
#include <string>

namespace cantor {

// Raised when an operation's mathematical hypothesis is not met
// (e.g. 0 must be an allowed digit, gcd conditions, p(0)=0).
struct HypothesisViolated : std::runtime_error {
    explicit HypothesisViolated(const std::string& what) : std::runtime_error(what) {}
};

struct NotAMember : std::runtime_error {
    explicit NotAMember(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct NotAchievable : std::runtime_error {
    explicit NotAchievable(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeTooLarge : std::runtime_error {
    explicit DegreeTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct SupportTooLarge : std::runtime_error {
    explicit SupportTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct LevelTooLarge : std::runtime_error {
    explicit LevelTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct Unstable : std::runtime_error {
    explicit Unstable(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cantor
