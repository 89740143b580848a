// conecert - classification and certificates for conic programs
// Copyright 2026 The conecert authors
// Licensed under the Apache License, Version 2.0

#ifndef CONECERT_ERRORS_HPP
#define CONECERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace conecert {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input has the wrong size; message names the offending block or field.
struct DimensionError : Error {
    using Error::Error;
};

/// A value is outside its admissible range (zero matrix, scale <= 0, ...).
struct ValueError : Error {
    using Error::Error;
};

/// A caller broke a documented precondition.
struct ContractViolation : Error {
    using Error::Error;
};

/// Problem document violates the schema; `field` names the bad entry.
struct SchemaError : Error {
    explicit SchemaError(const std::string& field_path, const std::string& what)
        : Error("schema error at '" + field_path + "': " + what), field(field_path) {}
    std::string field;
};

}  // namespace conecert

#endif
