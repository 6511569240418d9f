#pragma once

#include <stdexcept>
#include <string>

namespace posetcomp {

enum class ErrorKind {
    antisymmetry_violation,
    unknown_name,
    not_t0,
    index_out_of_range,
    degree_mismatch,
    degree_underflow,
    arity_mismatch,
    composite_nonzero,
    factorization_violation,
    resource_limit,
    field_mismatch,
    invalid_field,
    division_by_zero,
    parse_error,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace posetcomp
