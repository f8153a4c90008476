#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph6 text.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An exhaustive routine was asked to run beyond its configured vertex cap.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, int order, int cap)
        : Error(what + ": order " + std::to_string(order) + " exceeds cap " + std::to_string(cap)),
          order_(order), cap_(cap) {}

    int order() const noexcept { return order_; }
    int cap() const noexcept { return cap_; }

private:
    int order_;
    int cap_;
};

/// A tree or forest was required but the input contains a cycle (or is disconnected where a tree is needed).
class NotATree : public Error {
public:
    using Error::Error;
};

/// A family certificate failed to replay.
class CertificateError : public Error {
public:
    using Error::Error;
};

}  // namespace rainbow
