// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by all molpea modules.
 *
 * Every failure raised by the library derives from molpea::Error and carries
 * an ErrorKind, which the command-line front end maps onto exit codes.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace molpea {

enum class ErrorKind {
    Io,
    Parse,
    Index,
    Consistency,
    Unsupported,
    Domain,
    Capacity,
    Symmetry,
    Shape,
    Preparation,
    Numerics,
    Degeneracy,
    Encoding,
};

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

template <ErrorKind K>
class KindError : public Error {
public:
    explicit KindError(const std::string& message) : Error(K, message) {}
};

using IoError          = KindError<ErrorKind::Io>;
using ParseError       = KindError<ErrorKind::Parse>;
using IndexError       = KindError<ErrorKind::Index>;
using ConsistencyError = KindError<ErrorKind::Consistency>;
using UnsupportedError = KindError<ErrorKind::Unsupported>;
using DomainError      = KindError<ErrorKind::Domain>;
using CapacityError    = KindError<ErrorKind::Capacity>;
using SymmetryError    = KindError<ErrorKind::Symmetry>;
using ShapeError       = KindError<ErrorKind::Shape>;
using PreparationError = KindError<ErrorKind::Preparation>;
using NumericsError    = KindError<ErrorKind::Numerics>;
using DegeneracyError  = KindError<ErrorKind::Degeneracy>;
using EncodingError    = KindError<ErrorKind::Encoding>;

inline std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Io: return "IoError";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::Index: return "IndexError";
        case ErrorKind::Consistency: return "ConsistencyError";
        case ErrorKind::Unsupported: return "UnsupportedError";
        case ErrorKind::Domain: return "DomainError";
        case ErrorKind::Capacity: return "CapacityError";
        case ErrorKind::Symmetry: return "SymmetryError";
        case ErrorKind::Shape: return "ShapeError";
        case ErrorKind::Preparation: return "PreparationError";
        case ErrorKind::Numerics: return "NumericsError";
        case ErrorKind::Degeneracy: return "DegeneracyError";
        case ErrorKind::Encoding: return "EncodingError";
    }
    return "Error";
}

}  // namespace molpea
