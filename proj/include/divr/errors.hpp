#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace divr {

/// Base class of all library errors. `code()` is a stable machine-readable tag
/// that the CLI maps into its JSON error document.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& msg) : Error("DegenerateInput", msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("DimensionMismatch", msg) {}
};

struct NumericalFailure : Error {
    explicit NumericalFailure(const std::string& msg) : Error("NumericalFailure", msg) {}
};

struct DegenerateBody : Error {
    explicit DegenerateBody(const std::string& msg) : Error("DegenerateBody", msg) {}
};

struct CertificateNotFound : Error {
    explicit CertificateNotFound(const std::string& msg) : Error("CertificateNotFound", msg) {}
};

struct IncompleteTable : Error {
    explicit IncompleteTable(const std::string& msg) : Error("IncompleteTable", msg) {}
};

struct NotAMetric : Error {
    explicit NotAMetric(const std::string& msg) : Error("NotAMetric", msg) {}
};

struct NotThreePoints : Error {
    explicit NotThreePoints(const std::string& msg) : Error("NotThreePoints", msg) {}
};

struct InvalidDiversity : Error {
    explicit InvalidDiversity(const std::string& msg) : Error("InvalidDiversity", msg) {}
};

struct DegenerateQuadratic : Error {
    explicit DegenerateQuadratic(const std::string& msg) : Error("DegenerateQuadratic", msg) {}
};

struct TargetOutOfRange : Error {
    explicit TargetOutOfRange(const std::string& msg) : Error("TargetOutOfRange", msg) {}
};

struct BisectionStalled : Error {
    explicit BisectionStalled(const std::string& msg) : Error("BisectionStalled", msg) {}
};

struct SingularSystem : Error {
    explicit SingularSystem(const std::string& msg) : Error("SingularSystem", msg) {}
};

struct ZeroDenominator : Error {
    explicit ZeroDenominator(const std::string& msg) : Error("ZeroDenominator", msg) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& msg) : Error("PreconditionViolated", msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("ParseError", msg) {}
};

} // namespace divr
