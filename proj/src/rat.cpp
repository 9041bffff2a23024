#include "wcoset/rat.hpp"

#include <cctype>

namespace wcoset {

namespace {

bool valid_int_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Int parse_int(const std::string& s) {
  if (!valid_int_token(s)) fail(ErrorKind::InvalidArgument, "not an integer: '" + s + "'");
  return Int(s);
}

Rat parse_rat(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  const Int num = parse_int(s.substr(0, slash));
  const Int den = parse_int(s.substr(slash + 1));
  if (den == 0) fail(ErrorKind::InvalidArgument, "zero denominator in '" + s + "'");
  return Rat(num, den);
}

}  // namespace wcoset
