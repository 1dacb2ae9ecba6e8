#pragma once

#include <vector>

#include "secdiv/ring2.hpp"
#include "secdiv/ring3.hpp"

namespace secdiv {

/// Inputs of the two-bundle construction on (curve) x (curve) x (Picard):
/// genus g, degree d, twist m (with h^1-vanishing bound m >= 2g-1-d),
/// number of points n, and the vanishing split delta at the moving point.
struct ChowParams {
  long g = 0;
  long d = 0;
  long m = 0;
  long n = 0;
  long delta = 0;
};

/// Smallest twist meeting the h^1-vanishing bound: max(0, 2g-1-d).
long default_twist(long g, long d);

enum class ChernKind { character, total_class };

/// Graded Chern data of a bundle-difference: rank plus homogeneous
/// components indexed by degree (comp[k] has degree k; comp[0] is unused).
/// The same container holds either Chern characters or Chern classes.
struct ChernData {
  ChernKind kind = ChernKind::character;
  Rational rank;
  std::vector<RingElement2> comp;

  long max_degree() const { return static_cast<long>(comp.size()) - 1; }
};

/// ch(nu^* L tensor O_D) for D = (m+n-delta)*Gamma_p + delta*Diagonal:
///   (1 + (d+m)*eta2 + gamma23 - eta2*theta) * (1 - e^{-(delta*eta1 +
///    delta*gamma12 + (m+n)*eta2)}).
RingElement3 sheaf_ch_M1(const ChowParams& p);

/// Pushforward along the middle curve factor: multiplies by the relative
/// Todd factor 1 + (1-g)*eta2 and extracts the eta2 coefficient, mapping
/// eta1 -> eta and gamma13 -> gamma. Monomials without eta2 (in particular
/// anything still containing gamma12 or gamma23) integrate to zero.
RingElement2 grr_pushforward(const RingElement3& x, long genus);

/// The full pipeline: graded Chern character of the pushed-forward bundle.
ChernData ch_M1(const ChowParams& p);

/// Total Chern class from a Chern character via Newton's identities
/// (p_k = k! ch_k, then the standard c/p recursion), and back.
ChernData chern_classes_from_ch(const ChernData& ch);
ChernData ch_from_chern_classes(const ChernData& c);

/// 1 + c_1 + c_2 + ... collapsed into a single ring element.
RingElement2 total_from_classes(const ChernData& c);

/// Degree-j Chern class of the bundle differences:
///   which = 0:  c_j of (trivial - E) = [e^{theta}]_j = theta^j / j!
///   which = 1:  c_j of (M1 - E) = [c(M1) * e^{theta}]_j
/// computed through the pushforward pipeline.
RingElement2 difference_chern(long j, int which, const ChowParams& p);

}  // namespace secdiv
