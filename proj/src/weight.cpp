#include "wcoset/weight.hpp"

#include <sstream>

namespace wcoset {

std::string to_string(const Weight& w) {
  std::string out = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += to_string(w[i]);
  }
  return out + ")";
}

Weight parse_weight(const std::string& s) {
  Weight w;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) w.push_back(parse_rat(tok));
  if (!s.empty() && s.back() == ',') fail(ErrorKind::InvalidArgument, "trailing comma in weight");
  return w;
}

}  // namespace wcoset
