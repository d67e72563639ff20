#pragma once

#include <stdexcept>
#include <string>

namespace tweetlab {

/// Input CSV lacks a column the schema maps to.
class SchemaError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed lexicon file; the message carries the 1-based line number.
class LexiconError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class TrainingError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Not enough documents of some class to build a balanced split.
class SplitError : public std::runtime_error {
public:
  SplitError(const std::string& message, int deficient_class)
      : std::runtime_error(message), deficient_class_(deficient_class) {}
  int deficient_class() const noexcept { return deficient_class_; }

private:
  int deficient_class_;
};

class SeriesError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Loss evaluated at a probability of exactly 0 or 1.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Metric whose denominator (row total) is zero.
class UndefinedMetric : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace tweetlab
