#pragma once

#include <stdexcept>
#include <string>

namespace cwr {

// Faults: contract violations raised as exceptions. Domain outcomes that are
// ordinary values (not-a-pth-power, not-in-span, not-a-member, ...) are
// modelled as empty optionals / status enums by the operations themselves.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidDescriptor : Error {
    explicit InvalidDescriptor(const std::string& w) : Error("invalid field descriptor: " + w) {}
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& w) : Error("field mismatch: " + w) {}
};

struct RingMismatch : Error {
    explicit RingMismatch(const std::string& w) : Error("ring mismatch: " + w) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& w) : Error("division by zero: " + w) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error("parse error: " + w) {}
};

struct LevelError : Error {
    explicit LevelError(const std::string& w) : Error("level error: " + w) {}
};

struct IndexMismatch : Error {
    explicit IndexMismatch(const std::string& w) : Error("index mismatch: " + w) {}
};

struct NotPIndependent : Error {
    explicit NotPIndependent(const std::string& w) : Error("tuple is not p-independent: " + w) {}
};

struct ModelMismatch : Error {
    explicit ModelMismatch(const std::string& w) : Error("model mismatch: " + w) {}
};

struct NotInSpan : Error {
    explicit NotInSpan(const std::string& w) : Error("element not in span: " + w) {}
};

struct StageError : Error {
    explicit StageError(const std::string& w) : Error("stage error: " + w) {}
};

struct SeparabilityWitnessInvalid : Error {
    explicit SeparabilityWitnessInvalid(const std::string& w)
        : Error("separability witness invalid: " + w) {}
};

struct MapUndefined : Error {
    explicit MapUndefined(const std::string& w) : Error("map undefined on input: " + w) {}
};

struct PrecisionError : Error {
    explicit PrecisionError(const std::string& w) : Error("precision exceeded: " + w) {}
};

struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& w) : Error("precision exhausted: " + w) {}
};

struct SortError : Error {
    explicit SortError(const std::string& w) : Error("sort error: " + w) {}
};

struct UnboundVariable : Error {
    explicit UnboundVariable(const std::string& w) : Error("unbound variable: " + w) {}
};

struct SchemaError : Error {
    explicit SchemaError(const std::string& w) : Error("schema error: " + w) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& w) : Error("internal invariant violated: " + w) {}
};

}  // namespace cwr
