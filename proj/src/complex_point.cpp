#include "hyperlog/complex_point.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fmt/format.h>

#include "hyperlog/errors.hpp"

namespace hyperlog {

double distance_to_segment(std::complex<double> z) noexcept {
  double x = std::clamp(z.real(), 0.0, 1.0);
  return std::abs(z - std::complex<double>(x, 0.0));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view s, std::string_view whole) {
  double v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (first == last || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw ParseError(fmt::format("invalid complex literal '{}'", whole), 1);
  }
  return v;
}

}  // namespace

ComplexPoint parse_complex(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty complex literal", 1);
  if (s == "inf" || s == "infinity") return ComplexPoint::infinity();

  if (s.back() != 'i') return ComplexPoint(parse_real(s, text), 0.0);

  std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_part = [&](std::string_view t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t, text);
  };
  if (split == std::string_view::npos) return ComplexPoint(0.0, imag_part(body));
  return ComplexPoint(parse_real(body.substr(0, split), text), imag_part(body.substr(split)));
}

std::vector<ComplexPoint> parse_complex_list(std::string_view text) {
  std::vector<ComplexPoint> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    out.push_back(parse_complex(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_complex(const ComplexPoint& z) {
  if (z.is_infinite()) return "inf";
  if (z.im() == 0.0) return fmt::format("{}", z.re());
  if (z.re() == 0.0) return fmt::format("{}i", z.im());
  return fmt::format("{}{}{}i", z.re(), z.im() < 0 ? "-" : "+", std::abs(z.im()));
}

}  // namespace hyperlog
