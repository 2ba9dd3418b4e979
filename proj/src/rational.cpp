#include <biform/rational.hpp>

#include <cctype>

namespace biform {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) fail(ErrorCode::parse_error, "not an exact rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(to_integer(num));
  auto den = text.substr(slash + 1);
  if (!is_integer_literal(den)) fail(ErrorCode::parse_error, "not an exact rational: '" + std::string(text) + "'");
  Integer d = to_integer(den);
  if (d == 0) fail(ErrorCode::parse_error, "zero denominator in '" + std::string(text) + "'");
  Rational q(to_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace biform
