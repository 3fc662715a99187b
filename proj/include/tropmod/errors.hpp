#pragma once

#include <stdexcept>
#include <string>

namespace tropmod {

// User-facing error: bad input, out-of-range request, refused scale.
// The CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Internal invariant broken (a theorem the code relies on failed to hold).
// Always a bug, never a user mistake. The CLI maps this to exit code 2.
class IntegrityError : public std::logic_error {
public:
    explicit IntegrityError(const std::string& what) : std::logic_error(what) {}
};

// Throws IntegrityError when `ok` is false. Use for checks that are
// mathematically guaranteed; the message should say which law failed.
inline void integrity_check(bool ok, const std::string& law) {
    if (!ok) throw IntegrityError("integrity violation: " + law);
}

} // namespace tropmod
