#pragma once

#include <stdexcept>
#include <string>

namespace simapprox {

enum class ErrorCode {
  Domain,
  OverlappingDiscs,
  ConditioningFailure,
  OrderCapExceeded,
  ScanExhausted,
  SlackDepleted,
  IndexOutOfRange,
  NoCloseTarget,
  MissingWindow,
  Config,
  Archive,
  Io,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class OrderCapExceeded : public Error {
 public:
  OrderCapExceeded(double max_bound, const std::string& what)
      : Error(ErrorCode::OrderCapExceeded, what), max_bound_(max_bound) {}
  double max_bound() const noexcept { return max_bound_; }

 private:
  double max_bound_;
};

class NoCloseTarget : public Error {
 public:
  explicit NoCloseTarget(int level)
      : Error(ErrorCode::NoCloseTarget,
              "no library target within 1/(2n) of g on D(0,n) for n = " + std::to_string(level)),
        level_(level) {}
  int level() const noexcept { return level_; }

 private:
  int level_;
};

class MissingWindow : public Error {
 public:
  MissingWindow(int level, int target)
      : Error(ErrorCode::MissingWindow, "ledger has no certificate for window (v=" +
                                            std::to_string(level) + ", N=" + std::to_string(2 * level) +
                                            ", k=" + std::to_string(target) +
                                            ", n=" + std::to_string(level) + ")"),
        level_(level),
        target_(target) {}
  int level() const noexcept { return level_; }
  int target() const noexcept { return target_; }

 private:
  int level_;
  int target_;
};

}  // namespace simapprox
