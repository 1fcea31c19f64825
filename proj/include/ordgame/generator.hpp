#pragma once

#include <coroutine>
#include <exception>
#include <optional>
#include <utility>

namespace ordgame {

// Minimal pull-style coroutine generator; std::generator is C++23.
template <class T>
class Generator {
 public:
  struct promise_type {
    std::optional<T> value;
    std::exception_ptr error;

    Generator get_return_object() { return Generator(handle::from_promise(*this)); }
    std::suspend_always initial_suspend() noexcept { return {}; }
    std::suspend_always final_suspend() noexcept { return {}; }
    std::suspend_always yield_value(T v) {
      value = std::move(v);
      return {};
    }
    void return_void() {}
    void unhandled_exception() { error = std::current_exception(); }
  };

  Generator(Generator&& other) noexcept : h_(std::exchange(other.h_, {})) {}
  Generator& operator=(Generator&& other) noexcept {
    if (this != &other) {
      if (h_) h_.destroy();
      h_ = std::exchange(other.h_, {});
    }
    return *this;
  }
  Generator(const Generator&) = delete;
  Generator& operator=(const Generator&) = delete;
  ~Generator() {
    if (h_) h_.destroy();
  }

  /// Next value, or nullopt once exhausted. Exceptions thrown inside the
  /// coroutine are rethrown here.
  std::optional<T> next() {
    if (!h_ || h_.done()) return std::nullopt;
    h_.resume();
    if (h_.promise().error) std::rethrow_exception(std::exchange(h_.promise().error, {}));
    if (h_.done()) return std::nullopt;
    return std::exchange(h_.promise().value, std::nullopt);
  }

 private:
  using handle = std::coroutine_handle<promise_type>;
  explicit Generator(handle h) : h_(h) {}
  handle h_;
};

}  // namespace ordgame
