#pragma once

#include <stdexcept>
#include <string>

namespace mis3 {

// Bad user input: unknown vertex ids, malformed files, stale rule witnesses.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant (e.g. a fold produced a self-loop).
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mis3
