#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace segre {

// Exact arithmetic everywhere: arbitrary-precision integers for exponent
// data, rationals for all geometry and class coefficients.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IVec = std::vector<Int>;  // integer vector (exponents, facet normals)
using QVec = std::vector<Rat>;  // rational vector (points, denominator forms)

inline QVec to_qvec(const IVec& v) {
  QVec out;
  out.reserve(v.size());
  for (const Int& x : v) out.emplace_back(x);
  return out;
}

inline Int dot(const IVec& a, const IVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero_vec(const IVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

inline bool is_zero_vec(const QVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

template <typename T>
std::string to_str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

template <typename V>
std::string vec_str(const V& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace segre
