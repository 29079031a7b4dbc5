#pragma once

#include <stdexcept>
#include <string>

namespace singchar {

/** Base of all toolkit errors; carries the failing module/operation in the message. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NonConvergence : public Error {
public:
    explicit NonConvergence(const std::string& msg) : Error("NonConvergence: " + msg) {}
};

class HorizonExceeded : public Error {
public:
    explicit HorizonExceeded(const std::string& msg) : Error("HorizonExceeded: " + msg) {}
};

class SpeedBoundExceeded : public Error {
public:
    explicit SpeedBoundExceeded(const std::string& msg) : Error("SpeedBoundExceeded: " + msg) {}
};

class NotCauchy : public Error {
public:
    explicit NotCauchy(const std::string& msg) : Error("NotCauchy: " + msg) {}
};

class HypothesisViolated : public Error {
public:
    explicit HypothesisViolated(const std::string& msg) : Error("HypothesisViolated: " + msg) {}
};

class NotWeakKam : public Error {
public:
    explicit NotWeakKam(const std::string& msg) : Error("NotWeakKam: " + msg) {}
};

class PreconditionFailed : public Error {
public:
    explicit PreconditionFailed(const std::string& msg) : Error("PreconditionFailed: " + msg) {}
};

class InsufficientSamples : public Error {
public:
    explicit InsufficientSamples(const std::string& msg) : Error("InsufficientSamples: " + msg) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error("ConfigError: " + msg) {}
};

} // namespace singchar
