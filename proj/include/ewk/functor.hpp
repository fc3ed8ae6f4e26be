#ifndef EWK_FUNCTOR_HPP
#define EWK_FUNCTOR_HPP

#include <memory>

#include "ewk/mtensor.hpp"

namespace ewk {

// A C-functor M_b -> M_{b'} presented as an expression tree over the three
// leaf families - (+)_b X, restriction of scalars, and Hom(X,-) - closed
// under composition. Each node supports the object action, the morphism
// action and the tensorial strength.
class FunctorExpr {
 public:
  enum class Kind { Identity, TensorBimodule, Restrict, HomModule, Compose };

  static FunctorExpr identity(const CommMonoid& b);
  // - (+)_b X : M_b -> M_{b'} for X a (b,b')-bimodule.
  static FunctorExpr tensor_bimodule(const Bimodule& X);
  // f_* : M_{btilde} -> M_{b'} for f : b' -> btilde.
  static FunctorExpr restrict_along(const MonoidMor& f);
  // Hom_b(X,-) : M_b -> M_{b'} for X a (b',b)-bimodule.
  static FunctorExpr hom_module(const Bimodule& X);
  static FunctorExpr compose_with(const FunctorExpr& outer, const FunctorExpr& inner);

  Kind kind() const;
  const CommMonoid& src_base() const;
  const CommMonoid& dst_base() const;

  RightModule apply_obj(const RightModule& z) const;
  ModuleMor apply_mor(const ModuleMor& h) const;

  // t^F_{w,z} : w (x) F(z) -> F(w (x) z)
  ModuleMor strength(Obj w, const RightModule& z) const;

  // True when every node is of left-adjoint type (tensor, restriction,
  // identity, composites thereof); false as soon as a Hom leaf appears.
  bool structurally_cocontinuous() const;

  const Bimodule& leaf_bimodule() const;    // TensorBimodule / HomModule nodes
  const MonoidMor& leaf_restrict() const;   // Restrict nodes
  FunctorExpr outer() const;                // Compose nodes
  FunctorExpr inner() const;

 private:
  struct Node;
  explicit FunctorExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// F(b_b) carrying its canonical left b-action F(gamma) o t^F.
Bimodule canonical_left_module(const FunctorExpr& F);

struct LambdaResult {
  Bimodule canonical;    // _b F(b_b)
  TensorOverResult ten;  // z (+)_b _b F(b_b)
  ModuleMor component;   // lambda_z : z (+)_b F(b_b) -> F(z)
  bool invertible;
};
LambdaResult lambda(const FunctorExpr& F, const RightModule& z);

struct ProbeEntry {
  int sample = 0;
  bool invertible = false;
  int src_dim = 0, dst_dim = 0;
};
struct ProbeResult {
  // All sampled components invertible: evidence of cocontinuity (samples
  // cannot quantify over every module). A single non-invertible component is
  // a certified witness of non-cocontinuity.
  bool iso_on_all_samples = true;
  bool structurally_cocontinuous = false;
  std::vector<ProbeEntry> entries;
};
ProbeResult cocontinuity_probe(const FunctorExpr& F, const std::vector<RightModule>& samples);

// Strength coherence (unit relation t_{c,z} = id and the composition
// relation for nested tensors) for a given functor at sampled data.
LawReport check_strength_laws(const FunctorExpr& F, Obj w, Obj v, const RightModule& z);

// lambda_{w (x) z} o a_{w,z,F(b)} = t^F_{w,z} o (id_w (x) lambda_z)
LawReport check_lambda_naturality(const FunctorExpr& F, Obj w, const RightModule& z);

// For a bimodule map h : X -> Y, the induced transformation between the
// tensor functors commutes with lambda (naturality of the counit in F).
LawReport check_lambda_natural_in_functor(const Bimodule& X, const Bimodule& Y, const Mor& h,
                                          const RightModule& z);

// The Eilenberg-Watts round trip at X: the canonical left module of
// - (+)_b X is isomorphic to X via the unit iso, as a bimodule map, and
// lambda is invertible on the given samples.
LawReport ew_roundtrip(const Bimodule& X, const std::vector<RightModule>& samples);

}  // namespace ewk

#endif  // EWK_FUNCTOR_HPP
