#pragma once

#include <stdexcept>
#include <string>

namespace l0fa {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix input is not square, not finite, or not symmetric.
class InvalidMatrix : public Error {
public:
    using Error::Error;
};

/// An argument that must be positive definite is not.
class NotPositiveDefinite : public Error {
public:
    using Error::Error;
};

/// L + S failed the positive-definiteness check, so log det is undefined.
class SingularSum : public Error {
public:
    using Error::Error;
};

/// The solver hit a singular L + S mid-run; carries the offending iteration.
class SingularLagrangian : public SingularSum {
public:
    SingularLagrangian(int iteration, const std::string& msg)
        : SingularSum(msg), iteration_(iteration) {}
    int iteration() const { return iteration_; }

private:
    int iteration_;
};

/// An iterate entry became NaN or infinite; carries the offending iteration.
class NonFiniteIterate : public Error {
public:
    NonFiniteIterate(int iteration, const std::string& msg)
        : Error(msg), iteration_(iteration) {}
    int iteration() const { return iteration_; }

private:
    int iteration_;
};

/// Initialization rank d outside [1, p-1].
class BadInitRank : public Error {
public:
    using Error::Error;
};

/// Invalid or inconsistent configuration values.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Random loading matrix failed the rank check after repeated redraws.
class DegenerateDraw : public Error {
public:
    using Error::Error;
};

/// Sample covariance is not positive definite (typically N < p).
class RankDeficientCovariance : public Error {
public:
    using Error::Error;
};

/// A metric over trials was requested on an empty trial list.
class EmptyTrialSet : public Error {
public:
    using Error::Error;
};

/// Estimated loading matrix is identically zero.
class ZeroEstimate : public Error {
public:
    using Error::Error;
};

/// Every cross-validation grid cell failed.
class AllCellsFailed : public Error {
public:
    using Error::Error;
};

/// Lipschitz estimate must be positive.
class NonPositiveK : public Error {
public:
    using Error::Error;
};

/// File could not be read, parsed, or written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace l0fa
