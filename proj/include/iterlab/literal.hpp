#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace iterlab {

// Hand-rolled scanner for the morphism literal grammar
//
//   mor    ::= clause (';' clause)*
//   clause ::= INT '->' value
//
// Values are monad specific; each monad parses its own value syntax through
// the primitives below. Whitespace between tokens is ignored.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool at_end();
  // Next non-blank character without consuming it, or '\0' at end.
  char peek();
  bool accept(std::string_view token);
  void expect(std::string_view token);
  bool accept_word(std::string_view word);
  std::int64_t integer();
  std::size_t index(std::size_t bound);
  double real();
  [[noreturn]] void fail(const std::string& message) const;

  std::size_t position() const { return pos_; }

 private:
  void skip_blanks();

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Exact decimal rendering that parses back to the same double.
std::string format_real(double d);

}  // namespace iterlab
