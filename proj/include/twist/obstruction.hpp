#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "twist/cover.hpp"
#include "twist/exactla.hpp"
#include "twist/laurent.hpp"

namespace twist {

enum class Torsion { yes, no, unknown };
enum class Principal { yes, unknown };
enum class Monic { yes, no, undefined };
enum class Verdict { consistent_with_fibred, not_fibred_certificate, inconclusive };

std::string to_string(Torsion t);
std::string to_string(Principal p);
std::string to_string(Monic m);
std::string to_string(Verdict v);

/// The three necessary conditions for the twisted Alexander module of a
/// fibred knot: torsion, principal elementary ideal, monic polynomial.
struct ObstructionReport {
  Torsion torsion = Torsion::unknown;
  Principal principal = Principal::unknown;
  Monic monic = Monic::undefined;
  CanonicalForm delta;
  Verdict verdict = Verdict::inconclusive;
  std::vector<std::string> reasons;
};

/// Not-fibred iff torsion or monicness fails; consistent iff all three hold;
/// inconclusive otherwise.
Verdict decide(Torsion t, Principal p, Monic m);

/// Evaluates a presentation matrix (rows = generators, columns = relations)
/// of a Z[s, s^-1]-module. If the minor cap is exceeded the report is
/// inconclusive with the reason recorded.
ObstructionReport evaluate_fibred_obstruction(const LambdaMatrix& p,
                                              std::size_t minor_cap = kDefaultMinorCap);

/// Report for data produced by the cover pipeline, whose presentation sI - H
/// is square with determinant delta.
ObstructionReport evaluate_fibred_obstruction(const TwistedInvariants& inv);

/// Order of a finitely generated abelian group; infinite groups are flagged.
struct GroupOrder {
  Integer value = 1;
  bool infinite = false;
  static GroupOrder finite(Integer n) { return {std::move(n), false}; }
  static GroupOrder infinite_order() { return {0, true}; }
};

/// For a module that surjects onto H (x) Z[s, s^-1]: any annihilator of the
/// module annihilates H (x) Z[s, s^-1], and for nontrivial H no nonzero monic
/// polynomial does. Returns true (no obstruction) only when H is trivial and
/// the report itself does not already certify non-fibredness.
bool annihilator_consequence(const ObstructionReport& report, const GroupOrder& order);

/// Whether H (x) Z[s, s^-1] has any nonzero annihilator: false exactly when
/// H is infinite (it then contains a free Z[s, s^-1] summand).
bool admits_nonzero_annihilator(const GroupOrder& order);

}  // namespace twist
