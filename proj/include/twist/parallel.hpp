#pragma once

#include <exception>
#include <mutex>

namespace twist {

/// Selects between the OpenMP kernel and its serial reference.
enum class Execution { serial, parallel };

/// Collects the first exception thrown inside an OpenMP region so it can be
/// rethrown on the calling thread.
class ExceptionSlot {
 public:
  template <typename F>
  void run(F&& body) noexcept {
    try {
      body();
    } catch (...) {
      std::lock_guard<std::mutex> lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }

  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

}  // namespace twist
