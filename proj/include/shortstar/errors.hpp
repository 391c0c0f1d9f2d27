#pragma once

#include <stdexcept>
#include <string>

namespace shortstar {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic / solver failures.
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};
struct PoleAtParameter : Error {
    explicit PoleAtParameter(const std::string& what) : Error("pole at parameter: " + what) {}
};
struct PoleAtOne : Error {
    PoleAtOne() : Error("pole at t=1") {}
};
struct InconsistentSamples : Error {
    explicit InconsistentSamples(const std::string& what) : Error("inconsistent samples: " + what) {}
};
struct NotRational : Error {
    explicit NotRational(const std::string& what) : Error("series is not rational: " + what) {}
};
struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& what) : Error("singular matrix: " + what) {}
};

// Algebra-level failures.
struct DescriptorMismatch : Error {
    DescriptorMismatch() : Error("elements belong to different cones") {}
};
struct NotInSp : Error {
    NotInSp() : Error("matrix is not in sp(V)") {}
};
struct SingularTransform : Error {
    explicit SingularTransform(const std::string& what) : Error("singular transform: " + what) {}
};
struct RelationViolation : Error {
    explicit RelationViolation(const std::string& what) : Error("defining relations violated: " + what) {}
};
struct FieldNotConjugable : Error {
    FieldNotConjugable() : Error("coefficient field does not support the requested conjugation") {}
};
struct NonzeroWeight : Error {
    explicit NonzeroWeight(const std::string& what) : Error("insertion has nonzero weight: " + what) {}
};

// Bridge-level failures.
struct DegenerateTrace : Error {
    int degree;
    std::string witness;
    DegenerateTrace(int deg, const std::string& det)
        : Error("trace form degenerate in filtration degree " + std::to_string(deg) +
                ", gram determinant = " + det),
          degree(deg), witness(det) {}
};
struct ExpansionFailure : Error {
    explicit ExpansionFailure(const std::string& what) : Error("expansion failure: " + what) {}
};
struct NotProportional : Error {
    explicit NotProportional(const std::string& what) : Error("form is not proportional to reference pairing: " + what) {}
};
struct RecursionStall : Error {
    explicit RecursionStall(const std::string& what) : Error("character recursion stalled: " + what) {}
};

}  // namespace shortstar
