// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace sslforge {

/// Base class for all sslforge errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// File missing, unreadable, or unwritable.
class IoError : public Error {
public:
    using Error::Error;
};

/// Corrupt or unsupported image file.
class DecodeError : public Error {
public:
    using Error::Error;
};

/// Rotation angle outside the active angle set.
class InvalidAngle : public Error {
public:
    using Error::Error;
};

/// Image too small for the requested operation.
class ImageTooSmall : public Error {
public:
    using Error::Error;
};

/// Region does not fit inside its host image.
class RegionOutOfBounds : public Error {
public:
    using Error::Error;
};

/// Affine map with a (near-)zero determinant.
class SingularMap : public Error {
public:
    using Error::Error;
};

/// Annotation point outside the image.
class PointOutOfBounds : public Error {
public:
    using Error::Error;
};

/// Annotation label outside [1, 99].
class LabelRangeError : public Error {
public:
    using Error::Error;
};

/// Fewer candidate images than a generator requires.
class PoolTooSmall : public Error {
public:
    using Error::Error;
};

/// Mask constraints (area, minimum edge, bounds) unsatisfiable.
class InfeasibleMask : public Error {
public:
    using Error::Error;
};

/// Constrained rejection sampling ran out of attempts.
class SamplingExhausted : public Error {
public:
    using Error::Error;
};

/// Advantage computation over an empty reward group.
class EmptyGroup : public Error {
public:
    using Error::Error;
};

/// Malformed record in a dataset or response file.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Image directory holds too few decodable images.
class TooFewImages : public Error {
public:
    using Error::Error;
};

}  // namespace sslforge
