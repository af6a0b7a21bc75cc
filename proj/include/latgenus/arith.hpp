#pragma once

// Exact arithmetic vocabulary shared by every module. All formula evaluation
// runs on GMP integers and rationals; fixed-width integers appear only inside
// the enumeration kernels after an explicit range check.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latgenus {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point of Z^n; its length is the ambient dimension of its context.
using LatticeVector = std::vector<Integer>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyPolytopeError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class ContractError : public Error {
 public:
  using Error::Error;
};

/// Thrown when a lattice-point enumeration would visit more candidate points
/// than the configured budget allows.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(Integer box_size, std::uint64_t budget)
      : Error("enumeration budget exceeded: bounding box holds " +
              box_size.get_str() + " candidates, budget " +
              std::to_string(budget)),
        box_size_(std::move(box_size)),
        budget_(budget) {}

  const Integer& box_size() const { return box_size_; }
  std::uint64_t budget() const { return budget_; }

 private:
  Integer box_size_;
  std::uint64_t budget_;
};

struct EnumOptions {
  std::uint64_t max_candidates = 100'000'000;
};

inline LatticeVector make_vector(std::initializer_list<long> coords) {
  LatticeVector v;
  v.reserve(coords.size());
  for (long c : coords) v.emplace_back(c);
  return v;
}

inline Integer to_integer(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return Integer(static_cast<unsigned long>(v));
}

inline Integer pow_neg_one(long e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

inline Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

/// "num/den" with den > 0; integers print as "num/1".
inline std::string fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Narrowing that refuses to lose information.
inline long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw DomainError("integer does not fit in a machine word: " + z.get_str());
  return z.get_si();
}

}  // namespace latgenus
