#ifndef SACD_ERRORS_HPP
#define SACD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sacd {

// Exit codes: 0 ok, 2 usage, 3 contract, 4 numeric.
struct Error : std::runtime_error {
    Error(const char* kind_, int exit_code_, const std::string& msg)
        : std::runtime_error(msg), kind(kind_), exit_code(exit_code_) {}
    const char* kind;
    int exit_code;
};

struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error("usage", 2, msg) {}
};

struct ContractError : Error {
    explicit ContractError(const std::string& msg) : Error("contract", 3, msg) {}
protected:
    ContractError(const char* kind_, const std::string& msg) : Error(kind_, 3, msg) {}
};

// Shape/dimension mismatches are contract violations with a dedicated kind.
struct DimensionError : ContractError {
    explicit DimensionError(const std::string& msg) : ContractError("dimension", msg) {}
};

struct NumericError : Error {
    explicit NumericError(const std::string& msg) : Error("numeric", 4, msg) {}
};

#define SACD_CHECK(cond, msg) \
    do { if (!(cond)) throw ::sacd::ContractError(msg); } while (0)

#define SACD_CHECK_DIM(cond, msg) \
    do { if (!(cond)) throw ::sacd::DimensionError(msg); } while (0)

}  // namespace sacd

#endif
