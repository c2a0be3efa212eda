#pragma once

#include <stdexcept>
#include <string>

namespace dynfeat {

// Bad user input: malformed files, out-of-range parameters, unsatisfiable
// preconditions. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dynfeat
