#ifndef LOJEX_ERRORS_HPP
#define LOJEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lojex {

// Input-side errors (CLI exit code 2).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SyntaxError : InputError {
    std::size_t position;
    SyntaxError(std::size_t pos, const std::string& msg)
        : InputError("syntax error at position " + std::to_string(pos) + ": " + msg),
          position(pos) {}
};

struct ArityError : InputError {
    using InputError::InputError;
};

struct NegativeExponentError : InputError {
    using InputError::InputError;
};

struct ZeroGermError : InputError {
    ZeroGermError() : InputError("zero germ") {}
};

struct UnsupportedArityError : InputError {
    using InputError::InputError;
};

struct NotSingularityError : InputError {
    using InputError::InputError;
};

// Contract violations between modules.
struct FaceNotOfThisGermError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotConvenientError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoFacetsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotQuasihomogeneousError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed: either a bug or an input violating the
// hypotheses the cross-check assumes (CLI exit code 3).
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace lojex

#endif
