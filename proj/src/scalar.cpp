#include "ewk/scalar.hpp"

namespace ewk {

namespace {

bool is_small_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(unsigned long p) {
  if (!is_small_prime(p)) throw ParseError("not a prime modulus: " + std::to_string(p));
  return Field(p);
}

std::string Field::name() const {
  return is_rationals() ? "q" : "fp:" + std::to_string(p_);
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    unsigned long p = 0;
    try {
      p = std::stoul(text.substr(3));
    } catch (const std::exception&) {
      throw ParseError("bad field spec: " + text);
    }
    return prime(p);
  }
  throw ParseError("bad field spec: " + text + " (expected q or fp:<p>)");
}

void Scalar::reduce() {
  if (fld_.is_rationals()) return;
  mpz_class p(static_cast<unsigned long>(fld_.characteristic()));
  if (v_.get_den() != 1) {
    // a/b mod p = a * b^{-1}
    mpz_class binv;
    if (mpz_invert(binv.get_mpz_t(), v_.get_den().get_mpz_t(), p.get_mpz_t()) == 0)
      throw Error("denominator not invertible mod " + p.get_str());
    mpz_class num = v_.get_num() * binv;
    v_ = mpq_class(num);
  }
  mpz_class r = v_.get_num() % p;
  if (r < 0) r += p;
  v_ = mpq_class(r);
}

void Scalar::check_field(const Scalar& o) const {
  if (fld_ != o.fld_)
    throw FieldMismatch("scalar fields differ: " + fld_.name() + " vs " + o.fld_.name());
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.v_ = -r.v_;
  r.reduce();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_field(o);
  v_ += o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_field(o);
  v_ -= o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_field(o);
  v_ *= o.v_;
  reduce();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero in " + fld_.name());
  if (fld_.is_rationals()) return Scalar(fld_, mpq_class(1) / v_);
  mpz_class p(static_cast<unsigned long>(fld_.characteristic()));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t());
  return Scalar(fld_, mpq_class(inv));
}

std::string Scalar::str() const {
  return fld_.is_rationals() ? v_.get_str() : v_.get_num().get_str();
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0) throw ParseError("bad scalar literal: " + text);
  if (v.get_den() == 0) throw ParseError("zero denominator in scalar literal: " + text);
  v.canonicalize();
  if (!f.is_rationals() && v.get_den() != 1)
    throw ParseError("prime-field scalar must be an integer residue: " + text);
  return Scalar(f, v);
}

}  // namespace ewk
