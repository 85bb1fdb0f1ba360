#pragma once

#include <stdexcept>
#include <string>

namespace ksys {

enum class Errc {
    invalid_conductor,
    not_a_unit,
    division_by_zero,
    group_too_large,
    invalid_generator,
    unsupported_rank,
    schema,
    validation,
    invalid_partition,
    malle_violation,
    not_reflection_group,
    invalid_truncation,
    truncation_insufficient,
    basis_incomplete,
    factorization_failed,
    invalid_input,
    unresolved_source,
    io,
    internal,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

#define KSYS_REQUIRE(cond, code, msg)                                                              \
    do {                                                                                           \
        if (!(cond)) ::ksys::fail(code, msg);                                                      \
    } while (0)

// Invariant breaches are internal errors no matter where they surface.
#define KSYS_INVARIANT(cond, msg) KSYS_REQUIRE(cond, ::ksys::Errc::internal, msg)

}  // namespace ksys
