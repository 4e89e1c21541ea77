#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace parsym {

// Malformed diagram / composition text or JSON.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation refused because its size exceeds the configured limit.
class CapExceeded : public std::out_of_range {
 public:
  CapExceeded(std::string what_arg, std::size_t requested, std::size_t cap)
      : std::out_of_range(what_arg + ": requested " + std::to_string(requested) +
                          " exceeds the configured limit " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

inline void check_cap(const char* what, std::size_t requested, std::size_t cap) {
  if (requested > cap) throw CapExceeded(what, requested, cap);
}

}  // namespace parsym
