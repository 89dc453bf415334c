#pragma once

#include <stdexcept>
#include <string>

namespace sp {

enum class ErrorKind {
    StripViolation,
    DanglingEndpoint,
    DuplicateVertexId,
    NotIntraCluster,
    LoopContraction,
    NonContiguousPartition,
    NotACycle,
    NotAPath,
    WalkNotInGraph,
    PreconditionViolated,
    BudgetExceeded,
    NotBounded,
    NotEven,
    Not3ConnectedSubdivision,
    OddIndependentPair,
    NotIncident,
    ParityObstruction,
    InternalContradiction,
    TooManyLeaves,
    StairViolation,
    NotASubdividedStar,
    NotATree,
    BadClusterRange,
    LowDegree,
    NotATheta,
    SearchBudgetExceeded,
    NotCandidateEmbedding,
    NotConnected,
    InvalidInput,
    UnsupportedClass,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sp
