#ifndef FRECHET_ERRORS_HPP
#define FRECHET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace frechet {

/// Raised when an internal invariant breaks: a fuzzy decider that does not
/// honor its contract, or an inconsistent switching-cell pairing.
class ContractViolation : public std::runtime_error {
public:
    explicit ContractViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace frechet

#endif
