#include "horikawa/rational.hpp"

#include <cctype>

#include "horikawa/errors.hpp"

namespace horikawa {

std::string repr(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational make_rational(const Int& num, const Int& den) {
  require(den != 0, "rational denominator must be nonzero");
  if (den < 0) return Rational(-num, -den);
  return Rational(num, den);
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [](const std::string& s) -> Int {
    require(!s.empty(), "rational literal must be nonempty");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    require(i < s.size(), "rational literal must contain digits");
    for (std::size_t j = i; j < s.size(); ++j)
      require(std::isdigit(static_cast<unsigned char>(s[j])) != 0,
              "rational literal must match [-+]?digits[/digits]: got \"" + s + "\"");
    return Int(s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace horikawa
