#ifndef UNIAFF_CERTIFICATE_HPP
#define UNIAFF_CERTIFICATE_HPP

#include <string>
#include <vector>

#include "uniaff/flag.hpp"
#include "uniaff/verdict.hpp"

namespace uniaff {

/// Witness for NOT_AFFINE: a conjugator chain, one element per nonzero
/// derived-series level (y_k in n^(k)), whose composed exponentials move
/// the input into the Levi part, plus the claimed landing element.
struct EmbeddingCert {
  std::vector<Element> conjugators;
  Element final_element;
};

/// Witness for AFFINE: the level index where the section branch fires,
/// the conjugators for the levels above it, and the section functional
/// phi on V_k with phi * A_k = 0 and phi(vbar_k) = 1.
struct SectionCert {
  int level = 0;
  std::vector<Element> conjugators;
  Vec phi;
};

struct VerifyResult {
  bool ok = false;
  std::string diagnostic;  // empty on success

  explicit operator bool() const { return ok; }
};

/// Both verifiers recompute everything from (g, ld, x) using only the
/// linear-algebra and Lie-algebra layers — no trace or engine data is
/// trusted. Certificates are canonical: the conjugators must equal the
/// free-variables-zero solutions lifted through the deterministic
/// representatives, and phi must equal the canonical left-kernel
/// functional. Any single-field perturbation of an emitted certificate
/// therefore fails.
VerifyResult verify_embedding(const LieAlgebra& g, const LeviData& ld, const Element& x,
                              const EmbeddingCert& cert);
VerifyResult verify_section(const LieAlgebra& g, const LeviData& ld, const Element& x,
                            const SectionCert& cert);

/// Independent decision for nilradicals of nilpotency class <= 2 and
/// dim g <= 8: decides whether some y in n satisfies exp(ad y)(x) in l
/// by direct elimination. The exponential truncates at the quadratic
/// term, and after splitting along n / [n,n] every unknown enters
/// linearly, so one exact linear solve settles existence.
VerdictKind oracle_decide_class2(const LieAlgebra& g, const LeviData& ld, const Element& x);

}  // namespace uniaff

#endif
