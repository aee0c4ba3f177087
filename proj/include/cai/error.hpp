#pragma once

#include <stdexcept>
#include <string>

namespace cai {

enum class error_code {
    out_of_range,
    mode_mismatch,
    invalid_graph,
    parse_error,
    inconsistent_rotation,
    planarity_violation,
    malformed_partition,
    precondition,
    not_in_class,
    class_violation,
    no_configuration,
    no_case_applies,
    property_violation,
    ear_without_interior,
    coloring_conflict,
    glue_conflict,
    size_guard,
    contradictory_forced,
    lift_failure,
    invalid_argument,
    internal,
};

const char* error_code_name(error_code c);

class error : public std::runtime_error {
public:
    error(error_code c, const std::string& msg)
        : std::runtime_error(std::string(error_code_name(c)) + ": " + msg), code_(c) {}
    error_code code() const { return code_; }

private:
    error_code code_;
};

[[noreturn]] inline void fail(error_code c, const std::string& msg) { throw error(c, msg); }

}  // namespace cai
