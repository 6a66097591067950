#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spinrank {

// Base for all user-input / data errors (CLI exit code 1).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Broken internal invariant (CLI exit code 2).
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SelfLoopError : public Error {
public:
    explicit SelfLoopError(const std::string& label)
        : Error("self-loop on member '" + label + "'"), label_(label) {}
    const std::string& label() const { return label_; }

private:
    std::string label_;
};

class EmptyInputError : public Error {
public:
    EmptyInputError() : Error("empty input: at least one edge is required") {}
};

class OutOfRangeError : public Error {
public:
    explicit OutOfRangeError(const std::string& what) : Error(what) {}
};

class IsolatedMemberError : public Error {
public:
    explicit IsolatedMemberError(const std::string& label)
        : Error("isolated member '" + label + "' (no incident activity)"), label_(label) {}
    const std::string& label() const { return label_; }

private:
    std::string label_;
};

class MalformedRecordError : public Error {
public:
    MalformedRecordError(std::size_t line_no, const std::string& reason)
        : Error("line " + std::to_string(line_no) + ": " + reason),
          line_no_(line_no), reason_(reason) {}
    std::size_t line_no() const { return line_no_; }
    const std::string& reason() const { return reason_; }

private:
    std::size_t line_no_;
    std::string reason_;
};

class IoError : public Error {
public:
    IoError(const std::string& path, const std::string& what)
        : Error(path + ": " + what) {}
};

class LengthMismatchError : public Error {
public:
    LengthMismatchError(std::size_t a, std::size_t b)
        : Error("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class NonFiniteError : public Error {
public:
    explicit NonFiniteError(std::size_t index)
        : Error("non-finite score at index " + std::to_string(index)), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

class TooSmallError : public Error {
public:
    explicit TooSmallError(const std::string& what) : Error(what) {}
};

class TooManyEdgesError : public Error {
public:
    TooManyEdgesError(std::size_t requested, std::size_t capacity)
        : Error("requested " + std::to_string(requested) + " edges but capacity is " +
                std::to_string(capacity)) {}
};

class VariantMismatchError : public InternalError {
public:
    explicit VariantMismatchError(const std::string& what) : InternalError(what) {}
};

}  // namespace spinrank
