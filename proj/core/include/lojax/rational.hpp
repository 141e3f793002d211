// Exact arithmetic base types and small helpers shared across the library.
// Everything is arbitrary-precision rational; no floating point anywhere.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lojax {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using ZVec = std::vector<Int>;  // lattice vectors: exponents, facet normals
using QVec = std::vector<Rat>;  // rational points in Newton space

inline Rat to_rat(const Int& z) { return Rat(z); }

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

Int gcd_int(const Int& a, const Int& b);
Int lcm_int(const Int& a, const Int& b);

/// Exact dot products.
Rat dot(const ZVec& v, const QVec& p);
Int dot(const ZVec& v, const ZVec& w);
Rat dot(const QVec& v, const QVec& w);

QVec to_qvec(const ZVec& v);
/// Integer content extraction: v must be integral componentwise.
ZVec to_zvec(const QVec& v);

bool lex_less(const QVec& a, const QVec& b);
bool lex_less(const ZVec& a, const ZVec& b);

/// Comparator object for the overloads above, usable with std algorithms.
struct LexLess {
  template <typename V>
  bool operator()(const V& a, const V& b) const {
    return lex_less(a, b);
  }
};

/// "p/q" in lowest terms, "p" when the denominator is 1.
std::string rat_to_string(const Rat& q);
std::string int_to_string(const Int& z);

/// Parses "p", "-p", or "p/q". Throws InvalidInput on malformed text.
Rat rat_from_string(const std::string& s);

std::string vec_to_string(const ZVec& v);
std::string vec_to_string(const QVec& v);

}  // namespace lojax
