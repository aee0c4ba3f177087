#include "cai/error.hpp"

namespace cai {

const char* error_code_name(error_code c) {
    switch (c) {
    case error_code::out_of_range: return "OutOfRange";
    case error_code::mode_mismatch: return "ModeMismatch";
    case error_code::invalid_graph: return "InvalidGraph";
    case error_code::parse_error: return "ParseError";
    case error_code::inconsistent_rotation: return "InconsistentRotation";
    case error_code::planarity_violation: return "PlanarityViolation";
    case error_code::malformed_partition: return "MalformedPartition";
    case error_code::precondition: return "Precondition";
    case error_code::not_in_class: return "NotInClass";
    case error_code::class_violation: return "ClassViolation";
    case error_code::no_configuration: return "NoConfiguration";
    case error_code::no_case_applies: return "NoCaseApplies";
    case error_code::property_violation: return "PropertyViolation";
    case error_code::ear_without_interior: return "EarWithoutInterior";
    case error_code::coloring_conflict: return "ColoringConflict";
    case error_code::glue_conflict: return "GlueConflict";
    case error_code::size_guard: return "SizeGuard";
    case error_code::contradictory_forced: return "ContradictoryForced";
    case error_code::lift_failure: return "LiftFailure";
    case error_code::invalid_argument: return "InvalidArgument";
    case error_code::internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace cai
