#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freepc {

// Text input rejected; offset() is the byte position of the failure.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// No exact two-sided quotient exists for the given factors.
class quotient_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Recovery failed: bad mask, wrong attacker knowledge, or an unusable reply.
class attack_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Oracle transport or protocol failure.
class oracle_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rejection sampling exhausted its retry budget.
class sampling_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace freepc
