#pragma once

#include <stdexcept>
#include <string>

namespace takagi {

// Thrown when an enumeration or sampling request exceeds its configured cap.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a level t collides with a sampled value; the caller is expected
// to perturb t (e.g. by 2^-(depth+5)) and retry.
class degenerate_level_error : public std::runtime_error {
public:
    explicit degenerate_level_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace takagi
