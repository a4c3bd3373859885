#ifndef UNIAFF_ENGINE_HPP
#define UNIAFF_ENGINE_HPP

#include <variant>

#include "uniaff/certificate.hpp"

namespace uniaff {

enum class Branch { conjugate, section };

/// What happened at one derived-series level: the induced action A_k,
/// its image, the projected vector vbar_k, and the branch taken —
/// CONJUGATE with the chosen y_k when vbar_k lies in Im(A_k), SECTION
/// with the functional phi otherwise.
struct LevelRecord {
  int level = 0;
  Matrix action;
  Subspace action_image;
  Vec vbar;
  Branch branch = Branch::conjugate;
  Element y;    // conjugate branch
  Vec phi;      // section branch
};

using Certificate = std::variant<EmbeddingCert, SectionCert>;

struct Verdict {
  VerdictKind kind = VerdictKind::affine;
  Certificate certificate;
  std::vector<LevelRecord> trace;
};

/// Applies the automorphism exp(ad y), which realizes conjugation by
/// exp(y). Throws when ad(y) is not nilpotent.
Element conjugate_by_exp(const LieAlgebra& g, const Element& y, const Element& x);

/// A functional phi with phi * a = 0 and phi(vbar) = 1, built as the
/// first RREF basis vector of the left kernel of a that pairs
/// nontrivially with vbar, normalized. Throws when vbar lies in
/// image(a), where no such functional exists.
Vec build_section_functional(const Matrix& a, const Vec& vbar);

/// One Basic-Lemma step at the given level. Requires the nilradical
/// component of x to lie in level.sub. On the conjugate branch, x is
/// replaced by exp(ad y)(x) and its nilradical component drops into
/// n^(k+1); on the section branch x is returned unchanged.
struct StepResult {
  LevelRecord record;
  Element element;
};
StepResult step_level(const LieAlgebra& g, const LeviData& ld, const FlagLevel& level,
                      const Element& x);

/// Decides whether G/H is affine for H = exp(t x): walks the derived
/// series of the nilradical, at each level either conjugating the
/// nilradical component one level deeper or stopping with a section
/// functional. AFFINE comes with a SectionCert; NOT_AFFINE (every level
/// conjugated, the element landed in the Levi part) with an
/// EmbeddingCert. Throws on invalid inputs: x = 0, x not nilpotent, or
/// algebra/Levi validation failures.
Verdict decide(const LieAlgebra& g, const LeviData& ld, const Element& x);

}  // namespace uniaff

#endif
