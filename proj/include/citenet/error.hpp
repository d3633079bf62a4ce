#pragma once

#include <stdexcept>
#include <string>

namespace citenet {

enum class ErrorKind {
    parse,   // malformed input data
    domain,  // operation called outside its preconditions
    io,      // filesystem failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_parse(const std::string& msg) { throw Error(ErrorKind::parse, msg); }
[[noreturn]] inline void throw_domain(const std::string& msg) { throw Error(ErrorKind::domain, msg); }
[[noreturn]] inline void throw_io(const std::string& msg) { throw Error(ErrorKind::io, msg); }

}  // namespace citenet
