#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace slicefuse {

// Base for all library errors. The name is machine-readable and is what the
// CLI prints on stderr before exiting; what() is "<name>: <detail>".
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define SLICEFUSE_DEFINE_ERROR(NAME)                       \
    class NAME : public Error {                            \
    public:                                                \
        explicit NAME(const std::string& detail)           \
            : Error(#NAME, detail) {}                      \
    }

// volume
SLICEFUSE_DEFINE_ERROR(MalformedHeader);
SLICEFUSE_DEFINE_ERROR(DimensionMismatch);
SLICEFUSE_DEFINE_ERROR(NonFiniteVoxel);
SLICEFUSE_DEFINE_ERROR(IoFailure);
SLICEFUSE_DEFINE_ERROR(TooManySlices);

// phantom
SLICEFUSE_DEFINE_ERROR(InvalidSpec);

// model
SLICEFUSE_DEFINE_ERROR(WrongChannelCount);
SLICEFUSE_DEFINE_ERROR(ShapeMismatch);
SLICEFUSE_DEFINE_ERROR(EmptySequence);
SLICEFUSE_DEFINE_ERROR(LengthMismatch);
SLICEFUSE_DEFINE_ERROR(GradientUnavailable);

// train
SLICEFUSE_DEFINE_ERROR(TooFewSubjects);
SLICEFUSE_DEFINE_ERROR(DivergedLoss);
SLICEFUSE_DEFINE_ERROR(EmptyPartition);
SLICEFUSE_DEFINE_ERROR(SubjectLeakage);
SLICEFUSE_DEFINE_ERROR(ArchitectureMismatch);

// eval
SLICEFUSE_DEFINE_ERROR(EmptyEvaluation);
SLICEFUSE_DEFINE_ERROR(EmptyPredictions);
SLICEFUSE_DEFINE_ERROR(IncompatibleAggregation);

// xai
SLICEFUSE_DEFINE_ERROR(EmptySubset);
SLICEFUSE_DEFINE_ERROR(TooFewFolds);

// cli / config
SLICEFUSE_DEFINE_ERROR(ConfigError);

#undef SLICEFUSE_DEFINE_ERROR

} // namespace slicefuse
