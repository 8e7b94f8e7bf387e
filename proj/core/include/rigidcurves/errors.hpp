#ifndef RIGIDCURVES_ERRORS_HPP
#define RIGIDCURVES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rigidcurves {

struct ZeroInput : std::invalid_argument {
    explicit ZeroInput(const std::string& what) : std::invalid_argument(what) {}
};

struct DegenerateInput : std::invalid_argument {
    explicit DegenerateInput(const std::string& what) : std::invalid_argument(what) {}
};

struct InfiniteIntersection : std::runtime_error {
    explicit InfiniteIntersection(const std::string& what) : std::runtime_error(what) {}
};

// A germ outside the supported topological type list. Audits fail loudly
// with the offending branch data instead of guessing.
struct UnsupportedGerm : std::runtime_error {
    explicit UnsupportedGerm(const std::string& what) : std::runtime_error(what) {}
};

struct GenusMismatch : std::runtime_error {
    explicit GenusMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMatrix : std::invalid_argument {
    explicit SingularMatrix(const std::string& what) : std::invalid_argument(what) {}
};

struct EliminationOverflow : std::runtime_error {
    explicit EliminationOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct ResourceBudget : std::runtime_error {
    explicit ResourceBudget(const std::string& what) : std::runtime_error(what) {}
};

struct CertificationFailure : std::runtime_error {
    explicit CertificationFailure(const std::string& what) : std::runtime_error(what) {}
};

struct CurveContainsTriangleLine : std::invalid_argument {
    explicit CurveContainsTriangleLine(const std::string& what) : std::invalid_argument(what) {}
};

struct IdenticallyDegenerate : std::invalid_argument {
    explicit IdenticallyDegenerate(const std::string& what) : std::invalid_argument(what) {}
};

struct FlexCountUnexpected : std::runtime_error {
    explicit FlexCountUnexpected(const std::string& what) : std::runtime_error(what) {}
};

struct BadResidues : std::invalid_argument {
    explicit BadResidues(const std::string& what) : std::invalid_argument(what) {}
};

struct TypeBoundViolated : std::invalid_argument {
    explicit TypeBoundViolated(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownFamily : std::invalid_argument {
    explicit UnknownFamily(const std::string& what) : std::invalid_argument(what) {}
};

struct BadParams : std::invalid_argument {
    explicit BadParams(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct DescriptorMismatch : std::runtime_error {
    explicit DescriptorMismatch(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rigidcurves

#endif
