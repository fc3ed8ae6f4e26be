#include "ewk/cosmos.hpp"

#include <sstream>

namespace ewk {

namespace {

void check_same_field(const Mor& a, const Mor& b, const char* op) {
  if (a.field() != b.field())
    throw FieldMismatch(std::string(op) + ": fields differ (" + a.field().name() + " vs " +
                        b.field().name() + ")");
}

void check_same_shape(const Mor& a, const Mor& b, const char* op) {
  check_same_field(a, b, op);
  if (a.src() != b.src() || a.dst() != b.dst()) {
    std::ostringstream os;
    os << op << ": shapes differ (" << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x"
       << b.cols() << ")";
    throw DimMismatch(os.str());
  }
}

// Reduced row echelon form in place with deterministic pivoting: columns are
// swept left to right and the first row with a nonzero entry is the pivot.
// Returns the pivot columns in increasing order.
std::vector<int> rref_inplace(std::vector<Scalar>& a, int rows, int cols) {
  std::vector<int> pivots;
  int prow = 0;
  for (int c = 0; c < cols && prow < rows; ++c) {
    int sel = -1;
    for (int r = prow; r < rows; ++r) {
      if (!a[static_cast<size_t>(r) * cols + c].is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != prow) {
      for (int j = 0; j < cols; ++j)
        std::swap(a[static_cast<size_t>(sel) * cols + j], a[static_cast<size_t>(prow) * cols + j]);
    }
    const Scalar inv = a[static_cast<size_t>(prow) * cols + c].inverse();
    for (int j = c; j < cols; ++j) {
      Scalar& e = a[static_cast<size_t>(prow) * cols + j];
      if (!e.is_zero()) e *= inv;
    }
    for (int r = 0; r < rows; ++r) {
      if (r == prow) continue;
      const Scalar f = a[static_cast<size_t>(r) * cols + c];
      if (f.is_zero()) continue;
      for (int j = c; j < cols; ++j) {
        const Scalar& p = a[static_cast<size_t>(prow) * cols + j];
        if (p.is_zero()) continue;
        a[static_cast<size_t>(r) * cols + j] -= f * p;
      }
    }
    pivots.push_back(c);
    ++prow;
  }
  return pivots;
}

std::vector<Scalar> to_flat(const Mor& m) {
  std::vector<Scalar> a;
  a.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) a.push_back(m.at(r, c));
  return a;
}

Mor transpose(const Mor& m) {
  Mor t(m.field(), m.dst(), m.src());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) t.set(c, r, m.at(r, c));
  return t;
}

// Solve A X = B exactly; free variables are set to zero. Empty result when
// the system is inconsistent.
std::optional<Mor> solve_linear(const Mor& A, const Mor& B) {
  check_same_field(A, B, "solve");
  if (A.rows() != B.rows()) throw DimMismatch("solve: row counts differ");
  const int n = A.rows(), m = A.cols(), k = B.cols();
  const int w = m + k;
  std::vector<Scalar> aug(static_cast<size_t>(n) * w, Scalar(A.field()));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < m; ++c) aug[static_cast<size_t>(r) * w + c] = A.at(r, c);
    for (int c = 0; c < k; ++c) aug[static_cast<size_t>(r) * w + m + c] = B.at(r, c);
  }
  std::vector<int> pivots = rref_inplace(aug, n, w);
  for (int c : pivots)
    if (c >= m) return std::nullopt;
  Mor X(A.field(), Obj{k}, Obj{m});
  for (size_t i = 0; i < pivots.size(); ++i) {
    const int pc = pivots[i];
    for (int j = 0; j < k; ++j) X.set(pc, j, aug[i * w + m + j]);
  }
  return X;
}

}  // namespace

Mor Mor::identity(const Field& f, Obj x) {
  Mor m(f, x, x);
  for (int i = 0; i < x.dim; ++i) m.set(i, i, 1);
  return m;
}

void Mor::set(int r, int c, const Scalar& v) {
  if (v.field() != fld_)
    throw FieldMismatch("matrix entry field " + v.field().name() + " != " + fld_.name());
  e_[static_cast<size_t>(r) * cols() + c] = v;
}

bool Mor::is_zero() const {
  for (const Scalar& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

bool Mor::is_identity() const {
  if (src_ != dst_) return false;
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < cols(); ++c) {
      if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
    }
  return true;
}

Mor Mor::operator+(const Mor& o) const {
  check_same_shape(*this, o, "add");
  Mor r(fld_, src_, dst_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Mor Mor::operator-(const Mor& o) const {
  check_same_shape(*this, o, "sub");
  Mor r(fld_, src_, dst_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Mor Mor::operator-() const {
  Mor r(fld_, src_, dst_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
  return r;
}

Mor Mor::scaled(const Scalar& c) const {
  Mor r(fld_, src_, dst_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
  return r;
}

bool operator==(const Mor& a, const Mor& b) {
  if (a.fld_ != b.fld_ || a.src_ != b.src_ || a.dst_ != b.dst_) return false;
  return a.e_ == b.e_;
}

std::optional<Mor::EntryDiff> Mor::first_difference(const Mor& o) const {
  check_same_shape(*this, o, "diff");
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < cols(); ++c)
      if (at(r, c) != o.at(r, c)) return EntryDiff{r, c, at(r, c).str(), o.at(r, c).str()};
  return std::nullopt;
}

Mor compose(const Mor& g, const Mor& f) {
  check_same_field(g, f, "compose");
  if (g.src() != f.dst()) {
    std::ostringstream os;
    os << "compose: dst of inner (" << f.rows() << "x" << f.cols() << ") != src of outer ("
       << g.rows() << "x" << g.cols() << ")";
    throw DimMismatch(os.str());
  }
  Mor r(g.field(), f.src(), g.dst());
  for (int i = 0; i < g.rows(); ++i)
    for (int k = 0; k < g.cols(); ++k) {
      const Scalar& gik = g.at(i, k);
      if (gik.is_zero()) continue;
      for (int j = 0; j < f.cols(); ++j) {
        const Scalar& fkj = f.at(k, j);
        if (fkj.is_zero()) continue;
        r.set(i, j, r.at(i, j) + gik * fkj);
      }
    }
  return r;
}

Mor tensor(const Mor& f, const Mor& g) {
  check_same_field(f, g, "tensor");
  Mor r(f.field(), tensor(f.src(), g.src()), tensor(f.dst(), g.dst()));
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j) {
      const Scalar& fij = f.at(i, j);
      if (fij.is_zero()) continue;
      for (int k = 0; k < g.rows(); ++k)
        for (int l = 0; l < g.cols(); ++l) {
          const Scalar& gkl = g.at(k, l);
          if (gkl.is_zero()) continue;
          r.set(i * g.rows() + k, j * g.cols() + l, fij * gkl);
        }
    }
  return r;
}

Mor associator(const Field& f, Obj z, Obj x, Obj y) {
  return Mor::identity(f, Obj{z.dim * x.dim * y.dim});
}

Mor left_unitor(const Field& f, Obj x) { return Mor::identity(f, x); }
Mor right_unitor(const Field& f, Obj x) { return Mor::identity(f, x); }

Mor braiding(const Field& f, Obj x, Obj y) {
  Mor r(f, tensor(x, y), tensor(y, x));
  for (int i = 0; i < x.dim; ++i)
    for (int j = 0; j < y.dim; ++j) r.set(j * x.dim + i, i * y.dim + j, 1);
  return r;
}

Mor curry(const Mor& f, Obj z, Obj x) {
  if (f.cols() != z.dim * x.dim) throw DimMismatch("curry: source does not split as z (x) x");
  const Obj y = f.dst();
  Mor g(f.field(), z, hom_obj(x, y));
  for (int m = 0; m < z.dim; ++m)
    for (int i = 0; i < x.dim; ++i)
      for (int j = 0; j < y.dim; ++j) {
        const Scalar& v = f.at(j, m * x.dim + i);
        if (!v.is_zero()) g.set(i * y.dim + j, m, v);
      }
  return g;
}

Mor uncurry(const Mor& g, Obj z, Obj x, Obj y) {
  if (g.cols() != z.dim || g.rows() != x.dim * y.dim)
    throw DimMismatch("uncurry: shape does not match declared (z,x,y)");
  Mor f(g.field(), tensor(z, x), y);
  for (int m = 0; m < z.dim; ++m)
    for (int i = 0; i < x.dim; ++i)
      for (int j = 0; j < y.dim; ++j) {
        const Scalar& v = g.at(i * y.dim + j, m);
        if (!v.is_zero()) f.set(j, m * x.dim + i, v);
      }
  return f;
}

Mor evaluation(const Field& f, Obj x, Obj y) {
  return uncurry(Mor::identity(f, hom_obj(x, y)), hom_obj(x, y), x, y);
}

Mor coevaluation(const Field& f, Obj z, Obj x) {
  return curry(Mor::identity(f, tensor(z, x)), z, x);
}

Mor hom_compose(const Field& f, Obj x, Obj y, Obj z) {
  const Obj hyz = hom_obj(y, z), hxy = hom_obj(x, y), hxz = hom_obj(x, z);
  Mor mu(f, tensor(hyz, hxy), hxz);
  for (int j = 0; j < y.dim; ++j)
    for (int k = 0; k < z.dim; ++k)
      for (int i = 0; i < x.dim; ++i)
        mu.set(i * z.dim + k, (j * z.dim + k) * hxy.dim + (i * y.dim + j), 1);
  return mu;
}

Mor hom_postcompose(const Mor& h, Obj x) {
  const Obj y = h.src(), yp = h.dst();
  Mor r(h.field(), hom_obj(x, y), hom_obj(x, yp));
  for (int i = 0; i < x.dim; ++i)
    for (int j = 0; j < y.dim; ++j)
      for (int k = 0; k < yp.dim; ++k) {
        const Scalar& v = h.at(k, j);
        if (!v.is_zero()) r.set(i * yp.dim + k, i * y.dim + j, v);
      }
  return r;
}

Mor hom_precompose(const Mor& g, Obj y) {
  const Obj xp = g.src(), x = g.dst();
  Mor r(g.field(), hom_obj(x, y), hom_obj(xp, y));
  for (int i = 0; i < x.dim; ++i)
    for (int ip = 0; ip < xp.dim; ++ip) {
      const Scalar& v = g.at(i, ip);
      if (v.is_zero()) continue;
      for (int j = 0; j < y.dim; ++j) r.set(ip * y.dim + j, i * y.dim + j, v);
    }
  return r;
}

Mor hom_tensor_right(const Field& f, Obj x, Obj y, Obj b) {
  const Obj xb = tensor(x, b), yb = tensor(y, b);
  Mor r(f, hom_obj(x, y), hom_obj(xb, yb));
  for (int i = 0; i < x.dim; ++i)
    for (int j = 0; j < y.dim; ++j)
      for (int k = 0; k < b.dim; ++k)
        r.set((i * b.dim + k) * yb.dim + (j * b.dim + k), i * y.dim + j, 1);
  return r;
}

Mor hom_left_tensor(const Field& f, Obj w, Obj x, Obj y) {
  const Obj wy = tensor(w, y);
  Mor r(f, tensor(w, hom_obj(x, y)), hom_obj(x, wy));
  for (int m = 0; m < w.dim; ++m)
    for (int i = 0; i < x.dim; ++i)
      for (int j = 0; j < y.dim; ++j)
        r.set(i * wy.dim + (m * y.dim + j), m * (x.dim * y.dim) + (i * y.dim + j), 1);
  return r;
}

CoeqPresentation coequalizer(const Mor& f, const Mor& g) {
  check_same_shape(f, g, "coequalizer");
  const Mor d = f - g;
  const int n = d.rows();
  // Column space of d in reduced echelon form: rref of the transpose. Row k
  // of the result spans im(d) with pivot coordinate pivots[k].
  Mor dt = transpose(d);
  std::vector<Scalar> a = to_flat(dt);
  std::vector<int> pivots = rref_inplace(a, dt.rows(), dt.cols());
  const int r = static_cast<int>(pivots.size());

  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (!is_pivot[static_cast<size_t>(i)]) rest.push_back(i);

  CoeqPresentation c;
  c.lhs = f;
  c.rhs = g;
  c.quot = Obj{n - r};
  c.proj = Mor(f.field(), Obj{n}, c.quot);
  c.section = Mor(f.field(), c.quot, Obj{n});
  for (size_t j = 0; j < rest.size(); ++j) {
    c.proj.set(static_cast<int>(j), rest[j], 1);
    c.section.set(rest[j], static_cast<int>(j), 1);
    for (int k = 0; k < r; ++k) {
      const Scalar& v = a[static_cast<size_t>(k) * n + rest[j]];
      if (!v.is_zero()) c.proj.set(static_cast<int>(j), pivots[static_cast<size_t>(k)], -v);
    }
  }
  return c;
}

EqPresentation equalizer(const Mor& f, const Mor& g) {
  check_same_shape(f, g, "equalizer");
  const Mor d = f - g;
  const int m = d.cols();
  std::vector<Scalar> a = to_flat(d);
  std::vector<int> pivots = rref_inplace(a, d.rows(), m);
  const int r = static_cast<int>(pivots.size());

  std::vector<bool> is_pivot(static_cast<size_t>(m), false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<int> free;
  for (int j = 0; j < m; ++j)
    if (!is_pivot[static_cast<size_t>(j)]) free.push_back(j);

  EqPresentation e;
  e.lhs = f;
  e.rhs = g;
  e.sub = Obj{m - r};
  e.incl = Mor(f.field(), e.sub, Obj{m});
  e.retr = Mor(f.field(), Obj{m}, e.sub);
  for (size_t j = 0; j < free.size(); ++j) {
    e.incl.set(free[j], static_cast<int>(j), 1);
    e.retr.set(static_cast<int>(j), free[j], 1);
    for (int k = 0; k < r; ++k) {
      const Scalar& v = a[static_cast<size_t>(k) * m + free[j]];
      if (!v.is_zero()) e.incl.set(pivots[static_cast<size_t>(k)], static_cast<int>(j), -v);
    }
  }
  return e;
}

Mor induce_through_coequalizer(const CoeqPresentation& c, const Mor& h) {
  const Mor hl = compose(h, c.lhs), hr = compose(h, c.rhs);
  if (auto diff = hl.first_difference(hr)) {
    std::ostringstream os;
    os << "map does not coequalize the pair: entry (" << diff->row << "," << diff->col
       << ") differs: " << diff->lhs << " vs " << diff->rhs;
    throw FactorError(os.str());
  }
  Mor induced = compose(h, c.section);
  if (compose(induced, c.proj) != h)
    throw FactorError("presentation violated: induced map does not recover h through proj");
  return induced;
}

Mor induce_through_equalizer(const EqPresentation& e, const Mor& h) {
  const Mor hl = compose(e.lhs, h), hr = compose(e.rhs, h);
  if (auto diff = hl.first_difference(hr)) {
    std::ostringstream os;
    os << "map does not equalize the pair: entry (" << diff->row << "," << diff->col
       << ") differs: " << diff->lhs << " vs " << diff->rhs;
    throw FactorError(os.str());
  }
  Mor induced = compose(e.retr, h);
  if (compose(e.incl, induced) != h)
    throw FactorError("presentation violated: induced map does not recover h through incl");
  return induced;
}

CoeqPresentation tensor_pres_left(const Field& f, Obj w, const CoeqPresentation& c) {
  const Mor idw = Mor::identity(f, w);
  CoeqPresentation r;
  r.lhs = tensor(idw, c.lhs);
  r.rhs = tensor(idw, c.rhs);
  r.quot = tensor(w, c.quot);
  r.proj = tensor(idw, c.proj);
  r.section = tensor(idw, c.section);
  return r;
}

CoeqPresentation tensor_pres_right(const CoeqPresentation& c, const Field& f, Obj w) {
  const Mor idw = Mor::identity(f, w);
  CoeqPresentation r;
  r.lhs = tensor(c.lhs, idw);
  r.rhs = tensor(c.rhs, idw);
  r.quot = tensor(c.quot, w);
  r.proj = tensor(c.proj, idw);
  r.section = tensor(c.section, idw);
  return r;
}

Mor factor_through_epi(const Mor& epi, const Mor& rhs) {
  if (epi.src() != rhs.src()) throw DimMismatch("factor_through_epi: sources differ");
  auto xt = solve_linear(transpose(epi), transpose(rhs));
  if (!xt) throw FactorError("no factorization through the given epimorphism");
  Mor u = transpose(*xt);
  if (compose(u, epi) != rhs)
    throw FactorError("factorization through epimorphism failed verification");
  return u;
}

Mor factor_through_mono(const Mor& mono, const Mor& rhs) {
  if (mono.dst() != rhs.dst()) throw DimMismatch("factor_through_mono: targets differ");
  auto x = solve_linear(mono, rhs);
  if (!x) throw FactorError("no factorization through the given monomorphism");
  if (compose(mono, *x) != rhs)
    throw FactorError("factorization through monomorphism failed verification");
  return *x;
}

int rank(const Mor& m) {
  std::vector<Scalar> a = to_flat(m);
  return static_cast<int>(rref_inplace(a, m.rows(), m.cols()).size());
}

bool has_full_row_rank(const Mor& m) { return rank(m) == m.rows(); }
bool has_full_column_rank(const Mor& m) { return rank(m) == m.cols(); }

bool is_invertible(const Mor& m) { return m.src() == m.dst() && rank(m) == m.rows(); }

Mor inverse(const Mor& m) {
  if (m.src() != m.dst()) throw FactorError("inverse: not square");
  auto x = solve_linear(m, Mor::identity(m.field(), m.dst()));
  if (!x || compose(m, *x) != Mor::identity(m.field(), m.dst()) ||
      compose(*x, m) != Mor::identity(m.field(), m.src()))
    throw FactorError("inverse: matrix not invertible");
  return *x;
}

}  // namespace ewk
