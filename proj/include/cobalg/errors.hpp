#pragma once

#include <stdexcept>
#include <string>

namespace cobalg {

// Exit-code classes used by the CLI: parse=1, domain=2, resource=3.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Violated operation precondition (ShapeMismatch, FieldMismatch, NotSplit, ...).
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Desk-scale guard tripped (DegreeTooLarge, DimensionTooLarge).
class ResourceError : public std::runtime_error {
public:
    ResourceError(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace cobalg
