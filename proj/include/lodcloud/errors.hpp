#pragma once

#include <stdexcept>
#include <string>

namespace lodcloud {

// Base class for every error raised by the library. Each concrete type
// corresponds to one failure mode of the public API, so callers can catch
// precisely what they care about and the CLI can map anything derived from
// Error to a single exit code.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

#define LODCLOUD_ERROR_TYPE(Name)                                             \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& message) : Error(message) {}         \
    }

// Ingestion
LODCLOUD_ERROR_TYPE(MalformedLineError);
LODCLOUD_ERROR_TYPE(SelfLoopError);
LODCLOUD_ERROR_TYPE(DuplicateEdgeError);
LODCLOUD_ERROR_TYPE(EmptyInputError);
LODCLOUD_ERROR_TYPE(UnknownVertexError);
LODCLOUD_ERROR_TYPE(NegativeTripleCountError);
LODCLOUD_ERROR_TYPE(MalformedRowError);

// Connectivity / distances
LODCLOUD_ERROR_TYPE(EmptyGraphError);
LODCLOUD_ERROR_TYPE(DisconnectedGraphError);

// Statistics
LODCLOUD_ERROR_TYPE(LengthMismatchError);
LODCLOUD_ERROR_TYPE(ZeroVarianceError);
LODCLOUD_ERROR_TYPE(TooFewSamplesError);
LODCLOUD_ERROR_TYPE(DegenerateDistributionError);
LODCLOUD_ERROR_TYPE(DegenerateTableError);
LODCLOUD_ERROR_TYPE(DomainError);

// Community / centrality
LODCLOUD_ERROR_TYPE(EmptyEdgeSetError);
LODCLOUD_ERROR_TYPE(DisconnectedError);
LODCLOUD_ERROR_TYPE(NoConvergenceError);
LODCLOUD_ERROR_TYPE(NoLabeledVerticesError);
LODCLOUD_ERROR_TYPE(TooFewEdgesError);
LODCLOUD_ERROR_TYPE(OutOfRangeError);

// Export
LODCLOUD_ERROR_TYPE(InconsistentCoverageError);

#undef LODCLOUD_ERROR_TYPE

} // namespace lodcloud
