#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace presup {

// Root of every error the library throws.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t position, std::string expected)
      : Error("syntax error at position " + std::to_string(position) + ": expected " + expected),
        position_(position), expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

private:
  std::size_t position_;
  std::string expected_;
};

class UnknownWord : public Error {
public:
  explicit UnknownWord(std::string word)
      : Error("unknown word: " + word), word_(std::move(word)) {}

  const std::string& word() const { return word_; }

private:
  std::string word_;
};

enum class EvalErrorKind { StuckTerm, UnresolvedRequire, NonTermination };

class EvalError : public Error {
public:
  EvalError(EvalErrorKind kind, const std::string& what) : Error(what), kind_(kind) {}

  EvalErrorKind kind() const { return kind_; }

private:
  EvalErrorKind kind_;
};

} // namespace presup
