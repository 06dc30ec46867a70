#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ddsim {

// Coarse error class, mapped 1:1 onto CLI exit codes (1, 2, 3).
enum class ErrorKind { usage, data, pipeline };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& what) : Error(ErrorKind::usage, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorKind::data, what) {}
};

/// A required input column is missing.
class SchemaError : public Error {
public:
    SchemaError(const std::string& what, std::string column)
        : Error(ErrorKind::data, what), column_(std::move(column)) {}
    const std::string& column() const noexcept { return column_; }

private:
    std::string column_;
};

/// A single row could not be parsed; `line()` is 1-based and counts the header.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(ErrorKind::data, what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Domain invariant violated (end < start, duplicated case, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what,
                             std::vector<std::string> case_ids = {},
                             std::vector<std::size_t> lines = {})
        : Error(ErrorKind::data, what), case_ids_(std::move(case_ids)), lines_(std::move(lines)) {}
    const std::vector<std::string>& case_ids() const noexcept { return case_ids_; }
    const std::vector<std::size_t>& lines() const noexcept { return lines_; }

private:
    std::vector<std::string> case_ids_;
    std::vector<std::size_t> lines_;
};

class EmptyInputError : public Error {
public:
    explicit EmptyInputError(const std::string& what) : Error(ErrorKind::data, what) {}
};

class InsufficientDataError : public Error {
public:
    explicit InsufficientDataError(const std::string& what) : Error(ErrorKind::data, what) {}
};

class DegenerateSplitError : public Error {
public:
    explicit DegenerateSplitError(const std::string& what) : Error(ErrorKind::data, what) {}
};

class EmptyModelError : public Error {
public:
    explicit EmptyModelError(const std::string& what) : Error(ErrorKind::pipeline, what) {}
};

/// Structural invariant of a process model violated.
class ModelError : public Error {
public:
    explicit ModelError(const std::string& what) : Error(ErrorKind::pipeline, what) {}
};

class NonConformantError : public Error {
public:
    explicit NonConformantError(const std::string& what) : Error(ErrorKind::pipeline, what) {}
};

class AssemblyError : public Error {
public:
    AssemblyError(const std::string& what, std::vector<std::string> tasks = {})
        : Error(ErrorKind::pipeline, what), tasks_(std::move(tasks)) {}
    const std::vector<std::string>& tasks() const noexcept { return tasks_; }

private:
    std::vector<std::string> tasks_;
};

class SimulationError : public Error {
public:
    explicit SimulationError(const std::string& what) : Error(ErrorKind::pipeline, what) {}
};

class OptimizationError : public Error {
public:
    OptimizationError(const std::string& what, std::vector<std::string> diagnostics)
        : Error(ErrorKind::pipeline, what), diagnostics_(std::move(diagnostics)) {}
    const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<std::string> diagnostics_;
};

}  // namespace ddsim
