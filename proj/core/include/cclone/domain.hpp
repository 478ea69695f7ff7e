#pragma once

#include <stdexcept>
#include <string>

namespace cclone {

// A requested enumeration exceeds the configured search budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An object that is guaranteed by construction failed its independent
// re-check. Indicates a construction bug, never bad user input.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// No exclusion witness could be produced for a refutation request.
class RefutationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Size of the base set D = {0, ..., n-1}.
class DomainSize {
 public:
  explicit DomainSize(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("domain size must be >= 1");
  }
  int value() const { return n_; }
  friend bool operator==(const DomainSize&, const DomainSize&) = default;

 private:
  int n_;
};

inline void check_element(int x, DomainSize n) {
  if (x < 0 || x >= n.value())
    throw std::invalid_argument("element " + std::to_string(x) +
                                " out of range for domain of size " +
                                std::to_string(n.value()));
}

}  // namespace cclone
