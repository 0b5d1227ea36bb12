#pragma once

#include <stdexcept>
#include <string>

namespace snyder {

// Contract violation or unsupported input anywhere in the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Syntax or semantic failure while reading a series expression.
// offset is 1-based into the source text.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace snyder
