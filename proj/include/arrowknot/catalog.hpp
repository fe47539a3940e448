#pragma once

#include "arrowknot/formula.hpp"

namespace arrowknot {

/// Degree-2 invariant of length 5 with parameter a != 0, reconstructed with
/// the solver. Arrows written tail->head with their markings:
///   (0->1,0)(2->3,a) + (0->1,0)(3->2,a) - (0->1,a)(2->3,K-a)
///   + (0->2,0)(1->3,a) + (0->2,0)(3->1,a)
/// For a = K the first and third terms cancel. Every term has an arrow
/// marked 0, so it vanishes on closed braids.
Formula length5_formula(Marking K, Marking a);

/// Element of the kernel of d that is not R2-invariant, all markings m:
///   (0->1,m)(2->3,m) + 2·(0->1,m)(3->2,m) + 2·(0->2,m)(1->3,m) + (0->3,m)(2->1,m)
/// Its second and third terms are bigons. Needs m not in {0, K} so that no
/// term is a kink.
Formula counterexample_formula(Marking K, Marking m);

}  // namespace arrowknot
