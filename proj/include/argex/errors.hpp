#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace argex {

// Base of every error the library raises. The CLI maps each subclass to an
// exit code, so new error kinds need a matching entry there.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UndeclaredArgument : public Error {
 public:
  UndeclaredArgument(std::size_t line, const std::string& name)
      : Error("line " + std::to_string(line) + ": attack endpoint '" + name +
              "' is never declared"),
        name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class UnknownArgument : public Error {
 public:
  explicit UnknownArgument(const std::string& name)
      : Error("unknown argument '" + name + "'") {}
};

class NoExtensions : public Error {
 public:
  NoExtensions() : Error("the framework has no extensions under the requested semantics") {}
};

class StatusMismatch : public Error {
 public:
  using Error::Error;
};

class SelfAttacker : public Error {
 public:
  explicit SelfAttacker(const std::string& name)
      : Error("argument '" + name + "' attacks itself") {}
};

class InvalidPath : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

}  // namespace argex
