#ifndef EWK_COSMOS_HPP
#define EWK_COSMOS_HPP

#include <optional>
#include <vector>

#include "ewk/scalar.hpp"

namespace ewk {

// A finite-dimensional space over the session field, identified with its
// dimension. Basis is the implicit standard basis e_0 .. e_{dim-1}; the
// tensor product uses the lexicographic convention (i,j) -> i*dim(y)+j,
// which makes the associator and both unitors literal identity matrices.
struct Obj {
  int dim = 0;
  friend bool operator==(Obj a, Obj b) { return a.dim == b.dim; }
  friend bool operator!=(Obj a, Obj b) { return a.dim != b.dim; }
};

inline Obj unit_obj() { return Obj{1}; }
inline Obj tensor(Obj x, Obj y) { return Obj{x.dim * y.dim}; }
inline Obj hom_obj(Obj x, Obj y) { return Obj{x.dim * y.dim}; }

// An exact matrix dst.dim x src.dim, stored row-major. Zero-dimensional
// shapes are first-class (empty entry vectors with consistent dims).
class Mor {
 public:
  Mor() : fld_(Field::rationals()) {}
  Mor(const Field& f, Obj src, Obj dst)
      : fld_(f), src_(src), dst_(dst), e_(static_cast<size_t>(src.dim) * dst.dim, Scalar(f)) {}

  static Mor identity(const Field& f, Obj x);
  static Mor zero(const Field& f, Obj src, Obj dst) { return Mor(f, src, dst); }

  const Field& field() const { return fld_; }
  Obj src() const { return src_; }
  Obj dst() const { return dst_; }
  int rows() const { return dst_.dim; }
  int cols() const { return src_.dim; }

  const Scalar& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols() + c]; }
  void set(int r, int c, const Scalar& v);
  void set(int r, int c, long v) { set(r, c, Scalar(fld_, v)); }

  bool is_zero() const;
  bool is_identity() const;

  Mor operator+(const Mor& o) const;
  Mor operator-(const Mor& o) const;
  Mor operator-() const;
  Mor scaled(const Scalar& c) const;

  friend bool operator==(const Mor& a, const Mor& b);
  friend bool operator!=(const Mor& a, const Mor& b) { return !(a == b); }

  // Position and values of the first entry where *this and o differ.
  struct EntryDiff {
    int row, col;
    std::string lhs, rhs;
  };
  std::optional<EntryDiff> first_difference(const Mor& o) const;

 private:
  Field fld_;
  Obj src_, dst_;
  std::vector<Scalar> e_;
};

// --- symmetric monoidal structure -----------------------------------------

// g after f; throws DimMismatch when dst(f) != src(g).
Mor compose(const Mor& g, const Mor& f);

// Kronecker product under the lexicographic basis convention.
Mor tensor(const Mor& f, const Mor& g);

// Coherence morphisms of the strict backend, exposed by name.
Mor associator(const Field& f, Obj z, Obj x, Obj y);    // identity
Mor left_unitor(const Field& f, Obj x);                 // identity
Mor right_unitor(const Field& f, Obj x);                // identity
Mor braiding(const Field& f, Obj x, Obj y);             // permutation (i,j) -> (j,i)

// --- closed structure -------------------------------------------------------

// hom(x,y) has basis (i,j), i < dim x, j < dim y, at index i*dim(y)+j;
// basis element (i,j) stands for the matrix unit e_i -> e_j.

// f: z (x) x -> y  ~>  z -> hom(x,y). The source split (z,x) is declared
// by the caller; a wrong split is a dimension error.
Mor curry(const Mor& f, Obj z, Obj x);
Mor uncurry(const Mor& g, Obj z, Obj x, Obj y);

Mor evaluation(const Field& f, Obj x, Obj y);     // Ev: hom(x,y) (x) x -> y
Mor coevaluation(const Field& f, Obj z, Obj x);   // Cv: z -> hom(x, z (x) x)

// Composition morphism mu: hom(y,z) (x) hom(x,y) -> hom(x,z).
Mor hom_compose(const Field& f, Obj x, Obj y, Obj z);

Mor hom_postcompose(const Mor& h, Obj x);           // hom(x, src h) -> hom(x, dst h)
Mor hom_precompose(const Mor& g, Obj y);            // hom(dst g, y) -> hom(src g, y)
Mor hom_tensor_right(const Field& f, Obj x, Obj y, Obj b);  // M -> M (x) id_b
Mor hom_left_tensor(const Field& f, Obj w, Obj x, Obj y);   // w (x) hom(x,y) -> hom(x, w (x) y)

// --- (co)equalizers and factorization ---------------------------------------

// A computed coequalizer of the stored parallel pair: quot = dst/im(lhs-rhs),
// proj a full-row-rank projection with a chosen section, proj o section = id.
struct CoeqPresentation {
  Mor lhs, rhs;  // the defining parallel pair
  Obj quot;
  Mor proj;     // dst(pair) -> quot
  Mor section;  // quot -> dst(pair)
};

// A computed equalizer: sub = ker(lhs-rhs) with full-column-rank inclusion
// and a chosen retraction, retr o incl = id.
struct EqPresentation {
  Mor lhs, rhs;
  Obj sub;
  Mor incl;  // sub -> src(pair)
  Mor retr;  // src(pair) -> sub
};

CoeqPresentation coequalizer(const Mor& f, const Mor& g);
EqPresentation equalizer(const Mor& f, const Mor& g);

// The unique h^ with h^ o proj = h, for h coequalizing the pair (checked).
Mor induce_through_coequalizer(const CoeqPresentation& c, const Mor& h);
// The unique h^ with incl o h^ = h, for h equalizing the pair (checked).
Mor induce_through_equalizer(const EqPresentation& e, const Mor& h);

// Presentations of the same pair tensored with an identity on the left/right.
CoeqPresentation tensor_pres_left(const Field& f, Obj w, const CoeqPresentation& c);
CoeqPresentation tensor_pres_right(const CoeqPresentation& c, const Field& f, Obj w);

// The unique u with u o epi = rhs (epi must have full row rank; existence of
// the factorization is checked exactly).
Mor factor_through_epi(const Mor& epi, const Mor& rhs);
// The unique u with mono o u = rhs.
Mor factor_through_mono(const Mor& mono, const Mor& rhs);

int rank(const Mor& m);
bool has_full_row_rank(const Mor& m);
bool has_full_column_rank(const Mor& m);
bool is_invertible(const Mor& m);
Mor inverse(const Mor& m);  // throws FactorError when not invertible

}  // namespace ewk

#endif  // EWK_COSMOS_HPP
