#include "rational.hpp"

#include "error.hpp"

namespace fillprobe {

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  mpz_class num, den = 1;
  auto valid = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  std::string n = s.substr(0, slash);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  if (!valid(n)) throw Error(ErrorCode::kInvalidArgument, "malformed rational '" + s + "'");
  num.set_str(n, 10);
  if (slash != std::string::npos) {
    std::string d = s.substr(slash + 1);
    if (!valid(d) || d[0] == '-') throw Error(ErrorCode::kInvalidArgument, "malformed rational '" + s + "'");
    den.set_str(d, 10);
    if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator in '" + s + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

mpz_class floor_of(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class ceil_of(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace fillprobe
