#ifndef EWK_SUITES_HPP
#define EWK_SUITES_HPP

#include "ewk/functor.hpp"
#include "ewk/instance.hpp"

namespace ewk {

// Named verification suites, each evaluating the invariants of one part of
// the kernel against an instance. "all" concatenates every suite.
const std::vector<std::string>& suite_names();
Report run_suite(const std::string& name, const Instance& inst);

// Textual functor expressions over named instance entries, composed in
// diagrammatic order: "tensor(X) ; restrict(f) ; hom(Y)". Stages are
// tensor(<bimodule>), restrict(<morphism>), hom(<bimodule>), id(<algebra>).
FunctorExpr parse_functor_expr(const std::string& text, const Instance& inst);

// An equivariant map x -> y sampled from the hom object basis; the zero map
// when the hom space is trivial.
ModuleMor sample_module_mor(Rng& rng, const RightModule& x, const RightModule& y);

}  // namespace ewk

#endif  // EWK_SUITES_HPP
