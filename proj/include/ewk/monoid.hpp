#ifndef EWK_MONOID_HPP
#define EWK_MONOID_HPP

#include <string>

#include "ewk/laws.hpp"

namespace ewk {

// A commutative monoid object in the cosmos: a finite-dimensional commutative
// unital algebra given by its structure constants (the matrix of the product
// in the standard basis).
struct CommMonoid {
  std::string name;  // optional label, used in reports
  Field field;
  Obj carrier;
  Mor unit;     // c -> b
  Mor product;  // b (x) b -> b

  friend bool operator==(const CommMonoid& a, const CommMonoid& b) {
    return a.field == b.field && a.carrier == b.carrier && a.unit == b.unit &&
           a.product == b.product;
  }
  friend bool operator!=(const CommMonoid& a, const CommMonoid& b) { return !(a == b); }
};

struct MonoidMor {
  CommMonoid src, dst;
  Mor map;

  friend bool operator==(const MonoidMor& a, const MonoidMor& b) {
    return a.src == b.src && a.dst == b.dst && a.map == b.map;
  }
  friend bool operator!=(const MonoidMor& a, const MonoidMor& b) { return !(a == b); }
};

// An object of the comma category under b: a monoid btilde with a structure
// map b -> btilde.
struct MonoidOver {
  CommMonoid base, total;
  MonoidMor leg;  // base -> total
};

LawReport check_comm_monoid(const CommMonoid& b);
LawReport check_monoid_mor(const MonoidMor& f);
bool is_monoid_mor(const MonoidMor& f);

MonoidMor identity_mor(const CommMonoid& b);
MonoidMor compose(const MonoidMor& g, const MonoidMor& f);

struct Coproduct {
  CommMonoid monoid;  // b (x) b'
  MonoidMor p;        // b  -> b (x) b'
  MonoidMor pp;       // b' -> b (x) b'
};

// The tensor-product algebra, which is the coproduct in commutative monoids.
Coproduct coproduct(const CommMonoid& b, const CommMonoid& bp);

// The unique monoid map b (x) b' -> target with the given precompositions.
MonoidMor copair(const Coproduct& c, const MonoidMor& f, const MonoidMor& fp);

// Builtin algebras: ground, dual_numbers k[t]/(t^2), split_pair k x k,
// z2_group_algebra k[s]/(s^2-1), t_cubed k[t]/(t^3).
CommMonoid builtin_algebra(const std::string& name, const Field& f);
const std::vector<std::string>& builtin_algebra_names();

}  // namespace ewk

#endif  // EWK_MONOID_HPP
