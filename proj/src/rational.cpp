#include "jaccomb/rational.hpp"

#include <cctype>

#include "jaccomb/error.hpp"

namespace jaccomb {

Int round_nearest(const Rat& x) {
  Rat shifted = x + make_rat(1, 2);
  if (is_integer(shifted))
    fail(errc::invalid_input, "round_nearest: " + format_rational(x) + " is a half-integer");
  return floor_rat(shifted);
}

namespace {

bool valid_integer_token(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rational(const std::string& s) {
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!valid_integer_token(num) || !valid_integer_token(den) || den[0] == '-')
    fail(errc::invalid_input, "invalid rational '" + s + "' (expected \"num\" or \"num/den\")");
  Int n(num), d(den);
  if (d == 0) fail(errc::invalid_input, "invalid rational '" + s + "' (zero denominator)");
  return make_rat(n, d);
}

std::string format_rational(const Rat& x) {
  if (is_integer(x)) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

long long to_longlong(const Int& x) {
  if (!x.fits_slong_p()) fail(errc::limit_exceeded, "integer " + x.get_str() + " out of range");
  return static_cast<long long>(x.get_si());
}

}  // namespace jaccomb
