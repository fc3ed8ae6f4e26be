#ifndef EWK_LAX_HPP
#define EWK_LAX_HPP

#include <functional>

#include "ewk/functor.hpp"

namespace ewk {

// Lax tensor coherence data for a functor F : M_b -> M_{b'}: the unit
// coherence b'_{b'} -> F(b_b) and the binary coherence
// F(x) (+)_{b'} F(y) -> F(x (+)_b y), given as a procedure since it is
// indexed by pairs of modules.
struct LaxStructure {
  ModuleMor unit;
  std::function<ModuleMor(const RightModule&, const RightModule&)> binary;
};

struct LaxFunctor {
  FunctorExpr expr;
  LaxStructure lax;
};

// Unit, associativity and symmetry compatibility of the coherences with the
// monoidal structures on both sides, exact at the given objects.
LawReport check_lax_axioms(const LaxFunctor& F, const RightModule& x, const RightModule& y,
                           const RightModule& z);

// C-naturality of the binary coherence in each variable: the two strength
// squares at (w; x, y).
LawReport check_binary_naturality(const LaxFunctor& F, Obj w, const RightModule& x,
                                  const RightModule& y);

// True when the unit and the sampled binary coherences are isomorphisms
// (the functor is tensor/strong rather than merely lax at these samples).
bool lax_coherences_invertible(const LaxFunctor& F, const RightModule& x, const RightModule& y);

}  // namespace ewk

#endif  // EWK_LAX_HPP
