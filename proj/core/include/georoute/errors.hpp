#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace georoute {

class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Direction or angle requested between coincident points.
class DegenerateGeometry : public Error
{
  public:
    using Error::Error;
};

class InvalidArgument : public Error
{
  public:
    using Error::Error;
};

class UnknownVehicle : public Error
{
  public:
    using Error::Error;
};

// Raised by config parsing and validation. line() is 0 when the problem is
// not tied to a particular input line (e.g. an invariant spanning two keys).
class ConfigError : public Error
{
  public:
    ConfigError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace georoute
