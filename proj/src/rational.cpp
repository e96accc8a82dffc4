#include "sectionring/rational.hpp"

#include <cctype>

namespace sectionring {

std::optional<Rational> Rational::parse(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto digits = [](const std::string& t, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  size_t slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  size_t nstart = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
  if (!digits(num, nstart, num.size()) || !digits(den, 0, den.size()))
    return std::nullopt;
  mpz_class n(num), d(den);
  if (d == 0) return std::nullopt;
  return Rational(n, d);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace sectionring
