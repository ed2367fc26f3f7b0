#pragma once

#include <stdexcept>
#include <string>

namespace cend {

// Bad caller input: out-of-range parameters, malformed values, shape
// mismatches.
class InvalidArgument : public std::invalid_argument {
public:
    explicit InvalidArgument(const std::string& msg) : std::invalid_argument(msg) {}
};

// Filesystem / stream failures.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed file contents (JSONL, lemma table, snapshot files, configs).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input that the operation cannot work with
// (empty corpus, all-zero matrix, single-category model, ...).
class EmptyInput : public std::runtime_error {
public:
    explicit EmptyInput(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cend
