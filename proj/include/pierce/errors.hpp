#pragma once

#include <stdexcept>
#include <string>

namespace pierce {

// Violated operation precondition (bad input shape, unmet hypothesis).
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// An exact search ran out of its node/resolution budget. Never downgraded
// to a heuristic answer.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// File / schema problem; carries a field path when known.
struct io_error : std::runtime_error {
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pierce
