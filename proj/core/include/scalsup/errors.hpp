#pragma once

#include <stdexcept>
#include <string>

namespace scalsup {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An event is observable in one operand and unobservable in another.
class ConflictingObservability : public Error {
public:
    using Error::Error;
};

class UnknownEvent : public Error {
public:
    using Error::Error;
};

class AlphabetMismatch : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

/// A construction exceeded its configured state budget or iteration cap.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// Malformed generator, relabeling map or model document.
class InvalidModel : public Error {
public:
    using Error::Error;
};

} // namespace scalsup
