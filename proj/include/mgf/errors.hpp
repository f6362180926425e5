#pragma once

#include <stdexcept>
#include <string>

namespace mgf {

// An exact-arithmetic consistency check failed (a term that must vanish did not).
class SymbolicGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A zeta(1) symbol was requested with a nonzero coefficient.
class ZetaOneError : public SymbolicGuardError {
public:
    explicit ZetaOneError(const std::string& where)
        : SymbolicGuardError("zeta(1) guard: " + where) {}
};

}  // namespace mgf
