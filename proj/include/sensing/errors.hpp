#pragma once

#include <stdexcept>
#include <string>

namespace sensing {

/// Malformed input data: bad JSON schema, malformed grid, invalid MDP tables.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration would exceed the configured node budget.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sensing
