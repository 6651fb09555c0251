#ifndef TRIGROUP_ERRORS_HPP
#define TRIGROUP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trigroup {

// Error hierarchy shared by all modules. Every throw site names the
// violated precondition in the message.

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct IsotropicArgument : Error {
    explicit IsotropicArgument(const std::string& msg) : Error(msg) {}
};

struct NotPolar : Error {
    explicit NotPolar(const std::string& msg) : Error(msg) {}
};

struct UnsupportedAngle : Error {
    explicit UnsupportedAngle(const std::string& msg) : Error(msg) {}
};

struct DegenerateGram : Error {
    explicit DegenerateGram(const std::string& msg) : Error(msg) {}
};

struct Inadmissible : Error {
    explicit Inadmissible(const std::string& msg) : Error(msg) {}
};

struct BadIndex : Error {
    explicit BadIndex(const std::string& msg) : Error(msg) {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& msg) : Error(msg) {}
};

struct StartNotLoxodromic : Error {
    explicit StartNotLoxodromic(const std::string& msg) : Error(msg) {}
};

struct NegativeSqrt : Error {
    explicit NegativeSqrt(const std::string& msg) : Error(msg) {}
};

struct VariableMismatch : Error {
    explicit VariableMismatch(const std::string& msg) : Error(msg) {}
};

struct UnknownClaim : Error {
    explicit UnknownClaim(const std::string& msg) : Error(msg) {}
};

struct PlanUnsound : Error {
    explicit PlanUnsound(const std::string& msg) : Error(msg) {}
};

struct ScriptStepFailed : Error {
    explicit ScriptStepFailed(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace trigroup

#endif
