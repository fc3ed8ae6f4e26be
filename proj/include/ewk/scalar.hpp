#ifndef EWK_SCALAR_HPP
#define EWK_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ewk {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& what) : Error(what) {}
};

struct DimMismatch : Error {
  explicit DimMismatch(const std::string& what) : Error(what) {}
};

// Raised when a map fails to factor through a presentation, i.e. a
// "unique dotted arrow" does not exist for the given data.
struct FactorError : Error {
  explicit FactorError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Coefficient field of a session: the rationals (characteristic 0) or a
// prime field F_p. Fixed per session; all values carry their field and
// mixing is rejected at operation boundaries.
class Field {
 public:
  Field() : p_(0) {}

  static Field rationals() { return Field(0); }
  static Field prime(unsigned long p);

  bool is_rationals() const { return p_ == 0; }
  unsigned long characteristic() const { return p_; }

  // "q" or "fp:<p>"
  std::string name() const;
  static Field parse(const std::string& text);

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  explicit Field(unsigned long p) : p_(p) {}
  unsigned long p_;
};

// An exact field element. Over F_p the value is kept reduced to [0, p).
class Scalar {
 public:
  Scalar() : fld_(Field::rationals()), v_(0) {}
  explicit Scalar(const Field& f) : fld_(f), v_(0) {}
  Scalar(const Field& f, long n) : fld_(f), v_(n) { reduce(); }
  Scalar(const Field& f, const mpq_class& v) : fld_(f), v_(v) {
    v_.canonicalize();
    reduce();
  }

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }

  const Field& field() const { return fld_; }
  const mpq_class& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  Scalar inverse() const;
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    a.check_field(b);
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Canonical textual form: "n" or "n/d" over Q, decimal residue over F_p.
  std::string str() const;
  static Scalar parse(const Field& f, const std::string& text);

 private:
  void reduce();
  void check_field(const Scalar& o) const;

  Field fld_;
  mpq_class v_;
};

}  // namespace ewk

#endif  // EWK_SCALAR_HPP
