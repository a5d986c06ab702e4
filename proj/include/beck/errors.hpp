#ifndef BECK_ERRORS_HPP
#define BECK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace beck {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
 public:
  FieldMismatch(const std::string& a, const std::string& b)
      : Error("field mismatch: " + a + " vs " + b) {}
};

class BadFieldSpec : public Error {
 public:
  explicit BadFieldSpec(const std::string& what) : Error("bad field spec: " + what) {}
};

/// Parse failure with a 0-based character offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class EmptyEquation : public Error {
 public:
  EmptyEquation() : Error("equation is the zero polynomial") {}
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name) : Error("unbound variable: " + name) {}
};

class RankMismatch : public Error {
 public:
  RankMismatch(std::size_t a, std::size_t b)
      : Error("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class UnknownAlgebra : public Error {
 public:
  explicit UnknownAlgebra(const std::string& name) : Error("unknown algebra: " + name) {}
};

class UnknownVariety : public Error {
 public:
  explicit UnknownVariety(const std::string& name) : Error("unknown variety: " + name) {}
};

class BadStructureFile : public Error {
 public:
  explicit BadStructureFile(const std::string& what) : Error("bad structure file: " + what) {}
};

class CapTooSmall : public Error {
 public:
  CapTooSmall(int cap, int needed)
      : Error("weight cap " + std::to_string(cap) + " below relation weight " +
              std::to_string(needed)) {}
};

class NotCertified : public Error {
 public:
  explicit NotCertified(const std::string& what) : Error("not certified: " + what) {}
};

class StateMismatch : public Error {
 public:
  StateMismatch() : Error("extension elements belong to different states") {}
};

}  // namespace beck

#endif  // BECK_ERRORS_HPP
