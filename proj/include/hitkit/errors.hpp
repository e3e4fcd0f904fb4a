#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hitkit {

// Malformed expression input; `offset` is the byte position of the problem.
class parse_error : public std::runtime_error {
public:
    parse_error(std::string msg, std::size_t offset)
        : std::runtime_error(std::move(msg)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Input exceeds a documented size cap (group order, degree, index, ...).
class cap_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed; indicates a bug, not bad input.
class internal_error : public std::logic_error {
    using std::logic_error::logic_error;
};

// Domain violation (zero polynomial, composite modulus, bad parameter, ...).
class domain_error : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace hitkit
