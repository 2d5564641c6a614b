#include "core/rat.hpp"

#include <cctype>
#include <ostream>

namespace veron {

Rat Rat::parse(const std::string& s) {
  // mpq_class's string constructor is laxer than we want (accepts
  // whitespace, empty denominators abort). Validate shape first.
  auto is_int = [](const std::string& t) {
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  size_t slash = s.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = is_int(s);
  } else {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    ok = is_int(num) && is_int(den) && den.find('-') == std::string::npos &&
         den.find('+') == std::string::npos;
  }
  if (!ok) raise(Err::Parse, "bad rational literal: '" + s + "'");
  mpq_class q(s, 10);
  require(sgn(q.get_den()) != 0, Err::Parse, "bad rational literal: '" + s + "'");
  q.canonicalize();
  return Rat(q);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace veron
