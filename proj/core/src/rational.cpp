#include "lojax/rational.hpp"

#include "lojax/error.hpp"

#include <sstream>

namespace lojax {

Int floor_rat(const Rat& q) {
  Int n = num(q), d = den(q);  // d > 0 canonically
  Int t = n / d;
  if (n < 0 && t * d != n) --t;
  return t;
}

Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

Rat dot(const ZVec& v, const QVec& p) {
  check_internal(v.size() == p.size(), "dot: size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += to_rat(v[i]) * p[i];
  return s;
}

Int dot(const ZVec& v, const ZVec& w) {
  check_internal(v.size() == w.size(), "dot: size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * w[i];
  return s;
}

Rat dot(const QVec& v, const QVec& w) {
  check_internal(v.size() == w.size(), "dot: size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * w[i];
  return s;
}

QVec to_qvec(const ZVec& v) {
  QVec q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) q[i] = to_rat(v[i]);
  return q;
}

ZVec to_zvec(const QVec& v) {
  ZVec z(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    check_internal(is_integer(v[i]), "to_zvec: non-integral coordinate");
    z[i] = num(v[i]);
  }
  return z;
}

bool lex_less(const QVec& a, const QVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}
bool lex_less(const ZVec& a, const ZVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string int_to_string(const Int& z) { return z.str(); }

std::string rat_to_string(const Rat& q) {
  if (is_integer(q)) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw_invalid("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) throw_invalid("zero denominator in '" + s + "'");
    return Rat(n) / Rat(d);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw_invalid("malformed rational literal '" + s + "'");
  }
}

template <typename V>
static std::string vec_to_string_impl(const V& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

std::string vec_to_string(const ZVec& v) { return vec_to_string_impl(v); }
std::string vec_to_string(const QVec& v) { return vec_to_string_impl(v); }

}  // namespace lojax
