// Error types shared by all crtool modules.  Every failure mode that callers
// are expected to branch on gets its own class; everything derives from
// CrtoolError so the CLI can map any computational failure to exit code 1
// and any usage/parse failure to exit code 2.
#pragma once

#include <stdexcept>
#include <string>

namespace crtool {

class CrtoolError : public std::runtime_error {
public:
    CrtoolError(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Substitution bindings that break the z/z-bar involution.
class ConjugationMismatch : public CrtoolError {
public:
    explicit ConjugationMismatch(const std::string& what)
        : CrtoolError("ConjugationMismatch", what) {}
};

// Neumann inversion of I - i dPhi/du fails to stabilize below the
// truncation weight.
class NonPolynomialInverse : public CrtoolError {
public:
    explicit NonPolynomialInverse(const std::string& what)
        : CrtoolError("NonPolynomialInverse", what) {}
};

class PointNotOnSurface : public CrtoolError {
public:
    explicit PointNotOnSurface(const std::string& what)
        : CrtoolError("PointNotOnSurface", what) {}
};

// Type computation hit the layer cap without stabilizing or filling the
// tangent space; the cap is reported so callers can retry with a larger one.
class Inconclusive : public CrtoolError {
public:
    Inconclusive(int cap, const std::string& what)
        : CrtoolError("Inconclusive", what + " (cap " + std::to_string(cap) + ")"),
          cap_(cap) {}
    int cap() const { return cap_; }

private:
    int cap_;
};

// A normalization step would need an algebraic number outside Q(i).
class UnsupportedAlgebraic : public CrtoolError {
public:
    explicit UnsupportedAlgebraic(const std::string& what)
        : CrtoolError("UnsupportedAlgebraic", what) {}
};

class WrongCRType : public CrtoolError {
public:
    explicit WrongCRType(const std::string& what)
        : CrtoolError("WrongCRType", what) {}
};

class CapExceeded : public CrtoolError {
public:
    explicit CapExceeded(const std::string& what)
        : CrtoolError("CapExceeded", what) {}
};

// Fractional-power argument not positive at the evaluation point.
class DomainError : public CrtoolError {
public:
    explicit DomainError(const std::string& what)
        : CrtoolError("DomainError", what) {}
};

class InvalidParams : public CrtoolError {
public:
    explicit InvalidParams(const std::string& what)
        : CrtoolError("InvalidParams", what) {}
};

// A symbolic identity that must hold exactly has a nonzero residual.
class IdentityFailure : public CrtoolError {
public:
    explicit IdentityFailure(const std::string& what)
        : CrtoolError("IdentityFailure", what) {}
};

// An undetermined-coefficients solve has no solution within its ansatz.
class NoSolution : public CrtoolError {
public:
    explicit NoSolution(const std::string& what)
        : CrtoolError("NoSolution", what) {}
};

class ParseError : public CrtoolError {
public:
    explicit ParseError(const std::string& what)
        : CrtoolError("ParseError", what) {}
};

}  // namespace crtool
