#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quot {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), pos_(position) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class RingMismatch : public Error {
public:
    explicit RingMismatch(const std::string& msg) : Error(msg) {}
};

class FieldMismatch : public Error {
public:
    explicit FieldMismatch(const std::string& msg) : Error(msg) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class MissingVariable : public Error {
public:
    explicit MissingVariable(const std::string& name)
        : Error("no value for variable '" + name + "'") {}
};

class UnitIdeal : public Error {
public:
    explicit UnitIdeal(const std::string& msg) : Error(msg) {}
};

class InvalidChart : public Error {
public:
    explicit InvalidChart(const std::string& msg) : Error(msg) {}
};

class PointNotOnVariety : public Error {
public:
    explicit PointNotOnVariety(const std::string& msg) : Error(msg) {}
};

class RankDeficient : public Error {
public:
    explicit RankDeficient(const std::string& msg) : Error(msg) {}
};

class NoFrameFound : public Error {
public:
    explicit NoFrameFound(const std::string& msg) : Error(msg) {}
};

// Carries the offending factor as text, e.g. "T^2 - 2".
class NonSplitCharPoly : public Error {
public:
    explicit NonSplitCharPoly(const std::string& factor)
        : Error("characteristic polynomial does not split over the base field; "
                "non-split factor: " + factor),
          factor_(factor) {}
    const std::string& factor() const { return factor_; }

private:
    std::string factor_;
};

class UsageError : public Error {
public:
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

}  // namespace quot
