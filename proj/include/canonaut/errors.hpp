#pragma once

#include <stdexcept>
#include <string>

namespace canonaut {

// Input text could not be parsed. `position` is a 0-based byte offset.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Two root clusters sit in the ambiguous band between "same point" and
// "clearly distinct"; the configuration is too ill-conditioned to trust.
class ill_conditioned_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical certificate failed where the exact theory says it must hold
// (closure miss, proportionality miss, root-of-unity snap miss).
class tolerance_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The diagonal solution lattice has rank < 2: a one-parameter family of
// automorphisms exists, so the input is outside the valid surface family.
class infinite_group_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact integer arithmetic left the representable range.
class overflow_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace canonaut
