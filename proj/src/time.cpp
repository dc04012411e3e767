#include "refgraph/time.hpp"

#include <charconv>
#include <cstdio>

#include "refgraph/error.hpp"

namespace refgraph {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  int digits(std::size_t count) {
    if (pos_ + count > text_.size()) fail();
    int value = 0;
    auto first = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, first + count, value);
    if (ec != std::errc{} || ptr != first + count) fail();
    pos_ += count;
    return value;
  }

  void expect(char c) {
    if (!consume(c)) fail();
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const {
    return pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9';
  }

  bool done() const { return pos_ == text_.size(); }

  [[noreturn]] void fail() const {
    throw ParseError("invalid ISO-8601 timestamp '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Timestamp parse_timestamp(std::string_view text) {
  using namespace std::chrono;
  Cursor in(text);
  const int y = in.digits(4);
  in.expect('-');
  const int mo = in.digits(2);
  in.expect('-');
  const int d = in.digits(2);
  if (!in.consume('T') && !in.consume('t') && !in.consume(' ')) in.fail();
  const int h = in.digits(2);
  in.expect(':');
  const int mi = in.digits(2);
  in.expect(':');
  const int s = in.digits(2);
  if (in.consume('.') || in.consume(',')) {
    if (!in.at_digit()) in.fail();
    while (in.at_digit()) in.digits(1);
  }

  int offset_minutes = 0;
  if (in.consume('Z') || in.consume('z')) {
  } else if (!in.done()) {
    int sign = 0;
    if (in.consume('+')) sign = 1;
    else if (in.consume('-')) sign = -1;
    else in.fail();
    const int oh = in.digits(2);
    int om = 0;
    if (in.consume(':')) om = in.digits(2);
    else if (!in.done()) om = in.digits(2);
    if (oh > 23 || om > 59) in.fail();
    offset_minutes = sign * (oh * 60 + om);
  }
  if (!in.done()) in.fail();

  const year_month_day date{year{y}, month{static_cast<unsigned>(mo)},
                            day{static_cast<unsigned>(d)}};
  if (!date.ok() || h > 23 || mi > 59 || s > 59) in.fail();

  return sys_days{date} + hours{h} + minutes{mi} + seconds{s} - minutes{offset_minutes};
}

std::string format_timestamp(Timestamp ts) {
  using namespace std::chrono;
  const auto day_start = floor<days>(ts);
  const year_month_day date{day_start};
  const hh_mm_ss tod{ts - day_start};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()),
                static_cast<int>(tod.hours().count()), static_cast<int>(tod.minutes().count()),
                static_cast<int>(tod.seconds().count()));
  return buf;
}

std::string format_date(Timestamp ts) { return format_timestamp(ts).substr(0, 10); }

}  // namespace refgraph
