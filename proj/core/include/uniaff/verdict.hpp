#ifndef UNIAFF_VERDICT_HPP
#define UNIAFF_VERDICT_HPP

namespace uniaff {

enum class VerdictKind { affine, not_affine };

inline const char* verdict_name(VerdictKind k) {
  return k == VerdictKind::affine ? "AFFINE" : "NOT_AFFINE";
}

}  // namespace uniaff

#endif
