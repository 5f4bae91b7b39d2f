#ifndef BRAUERCALC_ERRORS_HPP
#define BRAUERCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace brc {

/// Bad input: malformed complex, unsupported ring pair, out-of-range degree, ...
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// An identity that should hold by construction failed. Carries a witness
/// description so callers can surface it (CLI exits with code 2 on these).
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace brc

#endif
