#pragma once

#include <stdexcept>

namespace cmreg {

// Base for all domain errors; the CLI maps these to exit code 2.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_a_permutation : error { using error::error; };
struct index_out_of_range : error { using error::error; };
struct not_vexillary : error { using error::error; };
struct not_1432_avoiding : error { using error::error; };
struct not_321_avoiding : error { using error::error; };
struct not_bruhat_comparable : error { using error::error; };
struct not_grassmannian : error { using error::error; };
struct descent_mismatch : error { using error::error; };
struct shape_not_contained : error { using error::error; };
struct too_many_parts : error { using error::error; };
struct enumeration_budget_exceeded : error { using error::error; };
struct invalid_corners : error { using error::error; };
struct point_off_boundary : error { using error::error; };
struct rank_chain_violation : error { using error::error; };
struct uncovered_variable : error { using error::error; };
struct no_such_permutation : error { using error::error; };
struct budget_exceeded : error { using error::error; };
struct parse_error : error { using error::error; };

// Signals a bug rather than bad input; the CLI maps these to exit code 1.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace cmreg
