#ifndef EXTISING_ERRORS_HPP
#define EXTISING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace extising {

/// Parameter outside the mathematical domain of an operation.
class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A solver produced a result that fails its own consistency check.
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A reconstructed density matrix is not positive semidefinite.
class PositivityError : public std::runtime_error {
  public:
    explicit PositivityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Ground state too close to degenerate for a meaningful comparison.
class DegeneracyError : public std::runtime_error {
  public:
    explicit DegeneracyError(const std::string& msg) : std::runtime_error(msg) {}
};

/// System size beyond what the dense reference solver supports.
class SizeError : public std::runtime_error {
  public:
    explicit SizeError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Root bracket does not contain a sign change / gap closing.
class BracketError : public std::runtime_error {
  public:
    explicit BracketError(const std::string& msg) : std::runtime_error(msg) {}
};

/// No finite coordination number reproduces the target profile.
class NoMatchError : public std::runtime_error {
  public:
    explicit NoMatchError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Too few usable points for a fit.
class InsufficientDataError : public std::runtime_error {
  public:
    explicit InsufficientDataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid CLI flags or configuration file.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem failure while writing results.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace extising

#endif
