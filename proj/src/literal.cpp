#include "iterlab/literal.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

#include "iterlab/errors.hpp"

namespace iterlab {

void Scanner::skip_blanks() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
    ++pos_;
  }
}

bool Scanner::at_end() {
  skip_blanks();
  return pos_ >= text_.size();
}

char Scanner::peek() {
  skip_blanks();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool Scanner::accept(std::string_view token) {
  skip_blanks();
  if (text_.substr(pos_, token.size()) == token) {
    pos_ += token.size();
    return true;
  }
  return false;
}

void Scanner::expect(std::string_view token) {
  if (!accept(token)) fail("expected '" + std::string(token) + "'");
}

bool Scanner::accept_word(std::string_view word) {
  skip_blanks();
  if (text_.substr(pos_, word.size()) != word) return false;
  std::size_t end = pos_ + word.size();
  if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
  pos_ = end;
  return true;
}

std::int64_t Scanner::integer() {
  skip_blanks();
  std::int64_t value = 0;
  auto first = text_.data() + pos_;
  auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), value);
  if (ec != std::errc{} || ptr == first) fail("expected integer");
  pos_ += static_cast<std::size_t>(ptr - first);
  return value;
}

std::size_t Scanner::index(std::size_t bound) {
  std::int64_t v = integer();
  if (v < 0 || static_cast<std::size_t>(v) >= bound) {
    fail("element " + std::to_string(v) + " out of range (carrier size " +
         std::to_string(bound) + ")");
  }
  return static_cast<std::size_t>(v);
}

double Scanner::real() {
  skip_blanks();
  std::size_t end = pos_;
  while (end < text_.size() &&
         (std::isdigit(static_cast<unsigned char>(text_[end])) || text_[end] == '.' ||
          text_[end] == 'e' || text_[end] == 'E' || text_[end] == '-' || text_[end] == '+')) {
    ++end;
  }
  std::string token(text_.substr(pos_, end - pos_));
  if (token.empty()) fail("expected number");
  char* stop = nullptr;
  double d = std::strtod(token.c_str(), &stop);
  if (stop != token.c_str() + token.size()) fail("malformed number '" + token + "'");
  pos_ = end;
  return d;
}

void Scanner::fail(const std::string& message) const {
  throw ParseError(message + " at offset " + std::to_string(pos_) + " in '" +
                   std::string(text_) + "'");
}

std::string format_real(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

}  // namespace iterlab
