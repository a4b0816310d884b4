#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace crs {

// Thrown when a configured cap (rule count, irreducible count, retry budget,
// search nodes) is exceeded. `stage` names the construction step that hit the cap.
class resource_limit_error : public std::runtime_error {
public:
    resource_limit_error(std::string stage, std::uint64_t count, std::uint64_t cap)
        : std::runtime_error("resource cap exceeded at stage '" + stage +
                             "': count " + std::to_string(count) +
                             " > cap " + std::to_string(cap)),
          stage_(std::move(stage)), count_(count), cap_(cap) {}

    const std::string& stage() const { return stage_; }
    std::uint64_t count() const { return count_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::string stage_;
    std::uint64_t count_;
    std::uint64_t cap_;
};

// Thrown when a construction invariant that should hold by theorem fails at
// runtime. Always indicates a bug or an unexpected input, never a cap.
class construction_error : public std::logic_error {
public:
    construction_error(const std::string& stage, const std::string& what)
        : std::logic_error("construction invariant failed at stage '" + stage + "': " + what) {}
};

} // namespace crs
