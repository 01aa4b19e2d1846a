#pragma once

#include <stdexcept>
#include <string>

namespace dpso {

/// Malformed argument to a numeric routine (empty vector, inverted bounds).
class InvalidInput : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class UnknownObjective : public std::invalid_argument
{
public:
    explicit UnknownObjective(const std::string& name)
        : std::invalid_argument("unknown objective '" + name + "' (expected rastrigin or griewank)"),
          name_(name)
    {
    }

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Validation failure on a named configuration field.
class ConfigError : public std::invalid_argument
{
public:
    ConfigError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field))
    {
    }

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class OutOfRange : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace dpso
