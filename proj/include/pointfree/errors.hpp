// SPDX-License-Identifier: Apache-2.0

#ifndef POINTFREE_ERRORS_HPP
#define POINTFREE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pointfree {

// The caller broke a contract: mixed-algebra operands, empty operands,
// out-of-range literals, and the like.
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The request is well-formed but exceeds a documented bound of the tool
// (enumeration caps, the direct-GIA universe cap, piece limits).
class capability_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text. `position` is a byte offset into the input when it
// is known, `npos` otherwise.
class parse_error : public std::runtime_error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit parse_error(const std::string& message, std::size_t position = npos)
        : std::runtime_error(position == npos
                                 ? message
                                 : message + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace pointfree

#endif
