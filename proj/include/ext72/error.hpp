#pragma once

#include <stdexcept>
#include <string>

namespace ext72 {

// Dimension/length mismatch between operands.
class DimensionError : public std::invalid_argument {
public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// A documented precondition of an operation was violated by the caller.
class ContractError : public std::logic_error {
public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// Input data malformed or inconsistent with its declared structure.
class StructuralError : public std::runtime_error {
public:
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or search exceeded its configured budget; the caller must
// choose a cheaper query or raise the budget explicitly.
class BudgetError : public std::runtime_error {
public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Text parsing failure; message carries the line number where known.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ext72
