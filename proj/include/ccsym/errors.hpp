#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccsym {

// Every failure the library signals carries a stable machine-readable kind;
// the CLI maps it to {"error": {"kind": ..., "detail": ...}}.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(detail), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define CCSYM_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                         \
    public:                                                             \
        explicit Name(const std::string& detail) : Error(#Name, detail) {} \
    }

CCSYM_DEFINE_ERROR(NonPrimeModulus);
CCSYM_DEFINE_ERROR(InvalidOrder);
CCSYM_DEFINE_ERROR(NotAUnit);
CCSYM_DEFINE_ERROR(RingMismatch);
CCSYM_DEFINE_ERROR(InsufficientPrecision);
CCSYM_DEFINE_ERROR(BadParameter);
CCSYM_DEFINE_ERROR(FieldOnly);
CCSYM_DEFINE_ERROR(DomainError);
CCSYM_DEFINE_ERROR(ShapeMismatch);
CCSYM_DEFINE_ERROR(NotInUnitGroup);
CCSYM_DEFINE_ERROR(InternalError);

#undef CCSYM_DEFINE_ERROR

// Parse failure with the byte offset of the offending token.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& expected)
        : Error("SyntaxError",
                "at offset " + std::to_string(offset) + ": expected " + expected),
          offset_(offset),
          expected_(expected) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

}  // namespace ccsym
