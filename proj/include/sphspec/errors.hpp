#ifndef SPHSPEC_ERRORS_HPP
#define SPHSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sphspec {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exactalg
struct ZeroConstantTerm : Error {
    ZeroConstantTerm() : Error("series has zero constant term, not invertible") {}
};
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

// lens
struct GcdViolation : Error {
    explicit GcdViolation(const std::string& what) : Error(what) {}
};
struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& what) : Error(what) {}
};
struct NotSpaceForm : Error {
    explicit NotSpaceForm(const std::string& what) : Error(what) {}
};

// molien
struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& what) : Error(what) {}
};
struct IncompatibleTruncation : Error {
    explicit IncompatibleTruncation(const std::string& what) : Error(what) {}
};

// invariants
struct OrderAbsent : Error {
    explicit OrderAbsent(const std::string& what) : Error(what) {}
};
struct WrongTotient : Error {
    explicit WrongTotient(const std::string& what) : Error(what) {}
};

// orbifolds
struct UnsupportedOrder : Error {
    explicit UnsupportedOrder(const std::string& what) : Error(what) {}
};
struct RigidityViolation : Error {
    explicit RigidityViolation(const std::string& what) : Error(what) {}
};

// spaceforms
struct RelationCheckFailed : Error {
    explicit RelationCheckFailed(const std::string& what) : Error(what) {}
};
struct NonDivisor : Error {
    explicit NonDivisor(const std::string& what) : Error(what) {}
};

// search
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

// cli / parsing
struct ParseError : Error {
    size_t offset;
    ParseError(const std::string& what, size_t off)
        : Error(what + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

} // namespace sphspec

#endif
