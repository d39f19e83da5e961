#pragma once

#include <stdexcept>
#include <string>

namespace lamelab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define LAMELAB_ERROR_TYPE(NAME)                                  \
    struct NAME : Error {                                         \
        explicit NAME(const std::string& msg) : Error(msg) {}     \
    }

LAMELAB_ERROR_TYPE(NonConvergence);
LAMELAB_ERROR_TYPE(DegeneratePoles);
LAMELAB_ERROR_TYPE(DegreeError);
LAMELAB_ERROR_TYPE(SingularPoint);
LAMELAB_ERROR_TYPE(PathThroughSingularity);
LAMELAB_ERROR_TYPE(StartAtSingularity);
LAMELAB_ERROR_TYPE(CycleThroughSingularity);
LAMELAB_ERROR_TYPE(BranchInconsistent);
LAMELAB_ERROR_TYPE(ContinuationLost);
LAMELAB_ERROR_TYPE(SingularJacobian);
LAMELAB_ERROR_TYPE(CoincidentZeros);
LAMELAB_ERROR_TYPE(NotStieltjesCase);
LAMELAB_ERROR_TYPE(NotClosed);
LAMELAB_ERROR_TYPE(TestPointTooClose);
LAMELAB_ERROR_TYPE(ArcAssignmentFailed);
LAMELAB_ERROR_TYPE(OutOfCell);
LAMELAB_ERROR_TYPE(ConfigError);

#undef LAMELAB_ERROR_TYPE

}  // namespace lamelab
