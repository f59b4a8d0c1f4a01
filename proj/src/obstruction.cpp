#include "twist/obstruction.hpp"

#include "twist/errors.hpp"

namespace twist {

std::string to_string(Torsion t) {
  switch (t) {
    case Torsion::yes: return "yes";
    case Torsion::no: return "no";
    case Torsion::unknown: return "unknown";
  }
  return {};
}

std::string to_string(Principal p) {
  return p == Principal::yes ? "yes" : "unknown";
}

std::string to_string(Monic m) {
  switch (m) {
    case Monic::yes: return "yes";
    case Monic::no: return "no";
    case Monic::undefined: return "undefined";
  }
  return {};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent_with_fibred: return "consistent-with-fibred";
    case Verdict::not_fibred_certificate: return "NOT-fibred-certificate";
    case Verdict::inconclusive: return "inconclusive";
  }
  return {};
}

Verdict decide(Torsion t, Principal p, Monic m) {
  if (t == Torsion::no || m == Monic::no) return Verdict::not_fibred_certificate;
  if (t == Torsion::yes && p == Principal::yes && m == Monic::yes)
    return Verdict::consistent_with_fibred;
  return Verdict::inconclusive;
}

namespace {

void finish(ObstructionReport& r) {
  r.verdict = decide(r.torsion, r.principal, r.monic);
  if (r.torsion == Torsion::no)
    r.reasons.emplace_back("torsion fails: the module is not Z[s, s^-1]-torsion");
  if (r.monic == Monic::no)
    r.reasons.emplace_back("monic fails: extreme coefficients of delta are not units");
  if (r.monic == Monic::undefined)
    r.reasons.emplace_back("monic undefined: delta = 0");
  if (r.principal == Principal::unknown)
    r.reasons.emplace_back("principal unknown: presentation is not square");
}

Monic monic_of(const CanonicalForm& delta) {
  if (delta.is_zero()) return Monic::undefined;
  return is_monic(delta.poly()) ? Monic::yes : Monic::no;
}

}  // namespace

ObstructionReport evaluate_fibred_obstruction(const LambdaMatrix& p,
                                              std::size_t minor_cap) {
  ObstructionReport r;
  r.torsion = rank_over_fractions(p) == p.rows() ? Torsion::yes : Torsion::no;
  r.principal = p.is_square() ? Principal::yes : Principal::unknown;
  try {
    r.delta = maximal_minor_gcd(p, Execution::parallel, minor_cap).delta;
    r.monic = monic_of(r.delta);
  } catch (const SizeLimitError& e) {
    r.monic = Monic::undefined;
    r.verdict = decide(r.torsion, r.principal, Monic::undefined);
    r.reasons.emplace_back(std::string("delta not computed: ") + e.what());
    if (r.torsion == Torsion::no)
      r.reasons.emplace_back("torsion fails: the module is not Z[s, s^-1]-torsion");
    return r;
  }
  finish(r);
  return r;
}

ObstructionReport evaluate_fibred_obstruction(const TwistedInvariants& inv) {
  ObstructionReport r;
  r.delta = inv.delta;
  r.torsion = inv.delta.is_zero() ? Torsion::no : Torsion::yes;
  r.principal = Principal::yes;
  r.monic = monic_of(inv.delta);
  finish(r);
  return r;
}

bool annihilator_consequence(const ObstructionReport& report, const GroupOrder& order) {
  if (report.verdict == Verdict::not_fibred_certificate) return false;
  return !order.infinite && order.value == 1;
}

bool admits_nonzero_annihilator(const GroupOrder& order) { return !order.infinite; }

}  // namespace twist
