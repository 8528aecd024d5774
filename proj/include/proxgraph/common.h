#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace proxgraph {

using node_id = std::uint32_t;

inline constexpr node_id kInvalidId = static_cast<node_id>(-1);

// Recoverable errors raised for bad user input.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed fvecs/ivecs/bvecs content.
struct FormatError : std::runtime_error {
    FormatError(const std::string& what, std::uint64_t offset)
            : std::runtime_error(what + " (at byte offset " + std::to_string(offset) + ")"),
              byte_offset(offset) {}
    std::uint64_t byte_offset;
};

struct CorruptIndexError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Programming errors: broken preconditions that no caller should trigger.
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

#define PROXGRAPH_EXPECT(cond, msg)                                                  \
    do {                                                                             \
        if (!(cond)) {                                                               \
            throw ::proxgraph::ContractViolation(std::string(__func__) + ": " + msg); \
        }                                                                            \
    } while (0)

#define PROXGRAPH_REQUIRE_ARG(cond, msg)                                        \
    do {                                                                        \
        if (!(cond)) {                                                          \
            throw ::proxgraph::ArgumentError(std::string(__func__) + ": " + msg); \
        }                                                                       \
    } while (0)

}  // namespace proxgraph
