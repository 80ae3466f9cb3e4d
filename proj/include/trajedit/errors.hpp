// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace trajedit {

/// Base class for all engine errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad configuration: plans, schedules, scene specs, CLI configs. CLI exit code 2.
struct ConfigError : Error {
    using Error::Error;
};

/// Bad data: inconsistent inputs, unreadable or mismatched files. CLI exit code 3.
struct DataError : Error {
    using Error::Error;
};

struct ResolutionMismatch : DataError {
    using DataError::DataError;
};
struct ShapeMismatch : DataError {
    using DataError::DataError;
};
struct EmptyInput : DataError {
    using DataError::DataError;
};
struct DegenerateCorrespondences : DataError {
    using DataError::DataError;
};
struct NoValidAnchors : DataError {
    using DataError::DataError;
};
struct ManifestError : DataError {
    using DataError::DataError;
};
struct IoError : DataError {
    using DataError::DataError;
};

struct InvalidConfig : ConfigError {
    using ConfigError::ConfigError;
};
struct InvalidSchedule : ConfigError {
    using ConfigError::ConfigError;
};
struct InvalidLevel : ConfigError {
    using ConfigError::ConfigError;
};
struct InvalidSpec : ConfigError {
    using ConfigError::ConfigError;
};
struct InvalidPose : ConfigError {
    using ConfigError::ConfigError;
};

}  // namespace trajedit
