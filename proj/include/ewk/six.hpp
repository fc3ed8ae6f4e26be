#ifndef EWK_SIX_HPP
#define EWK_SIX_HPP

#include "ewk/lax.hpp"

namespace ewk {

// The four functors attached to a morphism f : b -> b' of commutative
// monoids, with the two bimodules that realize them.
struct SixFunctorPack {
  MonoidMor f;
  Bimodule lower;  // _b b'_{b'} : realizes f^* = - (+)_b lower
  Bimodule upper;  // _{b'} b'_b : realizes f_! = - (+)_{b'} upper
  FunctorExpr pullback;      // f^* : M_b  -> M_b'
  FunctorExpr pushforward;   // f_* : M_b' -> M_b
  FunctorExpr shriek;        // f_! : M_b' -> M_b
  FunctorExpr upper_shriek;  // f^! : M_b  -> M_b'
};

SixFunctorPack build_pack(const MonoidMor& f);

// Unit eta*_x = (id_x (+) f) o jmath^{-1} : x -> f_* f^* x.
ModuleMor star_unit(const SixFunctorPack& p, const RightModule& x);
// Counit eps*_y : f^* f_* y -> y, the unique map with eps o cq = gamma'_y.
ModuleMor star_counit(const SixFunctorPack& p, const RightModule& y);

// Triangle identities of f^* -| f_* at (x over b, y over b').
LawReport check_star_triangles(const SixFunctorPack& p, const RightModule& x,
                               const RightModule& y);
// Triangle identities of f_! -| f^! at (z over b', y over b).
LawReport check_shriek_triangles(const SixFunctorPack& p, const RightModule& z,
                                 const RightModule& y);

// Lax coherence (f_*)_{x,y} : f_* x (+)_b f_* y -> f_*(x (+)_{b'} y).
ModuleMor lax_pushforward(const SixFunctorPack& p, const RightModule& x, const RightModule& y);
// Strong coherence (f^*)_{x,y} : f^* x (+)_{b'} f^* y -> f^*(x (+)_b y), an iso.
ModuleMor tensor_pullback(const SixFunctorPack& p, const RightModule& x, const RightModule& y);

LaxFunctor pushforward_lax(const SixFunctorPack& p);
LaxFunctor pullback_lax(const SixFunctorPack& p);

// The colax coherences of f^* computed from the adjunction mate formulas
// coincide with the inverses of tensor_pullback (unit part included).
LawReport check_mate_consistency(const SixFunctorPack& p, const RightModule& x,
                                 const RightModule& y);

struct ProjectionFormulaResult {
  ModuleMor canonical;  // x (+)_b f_* y -> f_*(f^* x (+)_{b'} y)
  Mor closed_form;      // the proof's explicit iso, as an underlying matrix
  LawReport report;
};
ProjectionFormulaResult projection_formula(const SixFunctorPack& p, const RightModule& x,
                                           const RightModule& y);

// f_!(y) -> f_*(y), the unit-iso style natural isomorphism.
ModuleMor shriek_star_iso(const SixFunctorPack& p, const RightModule& y);
LawReport check_shriek_star_naturality(const SixFunctorPack& p, const ModuleMor& h);

}  // namespace ewk

#endif  // EWK_SIX_HPP
