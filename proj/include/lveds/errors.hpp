#pragma once

#include <stdexcept>
#include <string>

namespace lveds {

// A structural guarantee the algorithms rely on failed at runtime. These
// checks stay on in release builds; a throw here means a bug, not bad input.
struct InvariantViolation : std::logic_error {
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

// Ball growth hit the configured radius cap before the stopping condition.
struct RadiusCapExceeded : std::runtime_error {
    explicit RadiusCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// The forward map cannot produce a dominating set of the target size for
// this cover on this embedding. Raised before any selection is attempted,
// with the offending vertex named in the message.
struct ForwardMapInfeasible : std::runtime_error {
    explicit ForwardMapInfeasible(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lveds
