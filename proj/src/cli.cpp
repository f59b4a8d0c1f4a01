#include "twist/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>

#include "twist/cover.hpp"
#include "twist/errors.hpp"
#include "twist/fixtures.hpp"
#include "twist/obstruction.hpp"
#include "twist/seifert.hpp"
#include "twist/textio.hpp"

namespace twist::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json json_int(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json json_matrix(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_int(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json json_group(const CokernelInvariants& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion) torsion.push_back(json_int(t));
  return Json{{"text", g.to_string()},
              {"torsion", std::move(torsion)},
              {"free_rank", g.free_rank},
              {"order", json_int(g.order())}};
}

std::size_t minor_cap() {
  if (const char* env = std::getenv("TWIST_MAX_MINORS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw UsageError("TWIST_MAX_MINORS must be a positive integer");
  }
  return kDefaultMinorCap;
}

int exit_code_for(Verdict v) {
  switch (v) {
    case Verdict::consistent_with_fibred: return kExitOk;
    case Verdict::not_fibred_certificate: return kExitNotFibred;
    case Verdict::inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

void report_fields(const ObstructionReport& r, Json& j) {
  j["delta"] = to_string(r.delta);
  j["torsion"] = to_string(r.torsion);
  j["principal"] = to_string(r.principal);
  j["monic"] = to_string(r.monic);
  j["verdict"] = to_string(r.verdict);
  j["reasons"] = r.reasons;
}

void print_report(const ObstructionReport& r, std::ostream& out) {
  out << "delta = " << to_string(r.delta) << "\n"
      << "torsion: " << to_string(r.torsion) << "\n"
      << "principal: " << to_string(r.principal)
      << (r.principal == Principal::yes ? " (square presentation)" : "") << "\n"
      << "monic: " << to_string(r.monic) << "\n"
      << "verdict: " << to_string(r.verdict) << "\n";
  for (const auto& reason : r.reasons) out << "reason: " << reason << "\n";
}

struct Source {
  std::string file;
  std::string fixture;
};

std::string load_text(const Source& src, FixtureKind kind) {
  if (!src.file.empty() && !src.fixture.empty())
    throw UsageError("give either --file or --fixture, not both");
  if (!src.fixture.empty()) {
    const Fixture& f = find_fixture(src.fixture);
    if (f.kind != kind) throw UsageError("fixture '" + src.fixture + "' has the wrong kind");
    return std::string(f.text);
  }
  if (src.file.empty()) throw UsageError("one of --file or --fixture is required");
  return read_file(src.file);
}

// --- monodromy -------------------------------------------------------------

struct MonodromyArgs {
  Source src;
  unsigned d = 1;
  std::string alpha;
  bool json = false;
};

int cmd_monodromy(const MonodromyArgs& a, std::ostream& out) {
  NamedEndo m = parse_monodromy(load_text(a.src, FixtureKind::monodromy));
  FiniteHom alpha;
  if (a.alpha.empty())
    alpha = FiniteHom::cyclic(1, std::vector<std::int64_t>(m.names.size(), 0));
  else if (a.alpha.starts_with("Z/") && a.alpha.find(':') != std::string::npos)
    alpha = parse_inline_alpha(a.alpha, m.names);
  else
    alpha = parse_hom(read_file(a.alpha), m.names);

  TwistedInvariants inv = twisted_invariants(m.endo, a.d, alpha);
  ObstructionReport report = evaluate_fibred_obstruction(inv);
  CokernelInvariants branched = branched_cover_homology_from_monodromy(m.endo, a.d);

  if (a.json) {
    Json j{{"command", "monodromy"},
           {"d", a.d},
           {"target", alpha.target().name()},
           {"group_order", inv.group_order},
           {"h1_rank", inv.h1_rank},
           {"h", json_matrix(inv.h_matrix)},
           {"det_h", json_int(inv.det_h)},
           {"branched_h1", json_group(branched)}};
    report_fields(report, j);
    out << j.dump(2) << "\n";
  } else {
    out << "d = " << a.d << "\n"
        << "target = " << alpha.target().name() << "\n"
        << "|G| = " << inv.group_order << "\n"
        << "H1 rank = " << inv.h1_rank << "\n"
        << "H = " << to_string(inv.h_matrix) << "\n"
        << "det(H) = " << inv.det_h << "\n"
        << "branched H1 = " << branched.to_string() << "\n";
    print_report(report, out);
  }
  return exit_code_for(report.verdict);
}

// --- seifert ---------------------------------------------------------------

struct SeifertArgs {
  Source src;
  unsigned d = 2;
  std::optional<std::string> r;
  unsigned sweep = 0;
  unsigned n = 0;
  bool json = false;
};

std::string sweep_line(const ResultantCheck& c) {
  std::ostringstream line;
  line << "d = " << c.d << ": H1 order = "
       << (c.snf_order == 0 ? std::string("infinite") : c.snf_order.get_str())
       << "; resultant = " << c.resultant << "; agree = " << (c.agree ? "true" : "false");
  return line.str();
}

int cmd_seifert(const SeifertArgs& a, std::ostream& out) {
  SeifertMatrix s = parse_seifert(load_text(a.src, FixtureKind::seifert));
  if (a.d < 2) throw UsageError("--d must be >= 2");
  CanonicalForm alex = alexander_polynomial(s);
  CokernelInvariants h1 = branched_homology(s, a.d);
  ResultantCheck check = resultant_order_check(s, a.d);

  Json j{{"command", "seifert"},
         {"size", s.size()},
         {"alexander", to_string(alex, 't')},
         {"d", a.d},
         {"h1", json_group(h1)},
         {"resultant", json_int(check.resultant)},
         {"agree", check.agree}};
  std::ostringstream text;
  text << "2g = " << s.size() << "\n"
       << "alexander = " << to_string(alex, 't') << "\n"
       << "d = " << a.d << "\n"
       << "H1 = " << h1.to_string() << "; resultant = " << check.resultant
       << "; agree = " << (check.agree ? "true" : "false") << "\n";

  if (a.r) {
    Integer r;
    if (r.set_str(*a.r, 10) != 0 || r < 2) throw UsageError("--r must be an integer >= 2");
    auto jump = character_jump(s, a.d, r);
    if (!jump) {
      j["character_jump"] = nullptr;
      text << "character: none (no surjection onto Z/" << r << ")\n";
    } else {
      Json chi = Json::array();
      std::string chi_text;
      for (const auto& v : jump->character) {
        chi.push_back(json_int(v));
        chi_text += (chi_text.empty() ? "" : ", ") + v.get_str();
      }
      j["character_jump"] = Json{{"r", json_int(r)},
                                 {"character", chi},
                                 {"handle", jump->handle},
                                 {"sheet", jump->sheet},
                                 {"padded", jump->padded},
                                 {"difference", json_int(jump->difference)},
                                 {"order", json_int(jump->order)}};
      text << "character = (" << chi_text << ") mod " << r << "\n"
           << "jump: handle " << jump->handle << ", sheets " << jump->sheet << "-"
           << jump->sheet + 1 << (jump->padded ? " (padded)" : "") << ", difference "
           << jump->difference << ", order " << jump->order << "\n";
    }
  }
  if (a.n > 0) {
    MonodromyPower mp = monodromy_power_presentation(s, a.n);
    j["monodromy"] = Json{{"n", a.n}, {"h", json_matrix(mp.h)}, {"det", json_int(mp.det)}};
    text << "H = " << to_string(mp.h) << "\n"
         << "det(H^" << a.n << " - I) = " << mp.det << "\n";
  }
  bool all_agree = check.agree;
  if (a.sweep > 0) {
    Json rows = Json::array();
    for (const auto& c : resultant_sweep(s, a.sweep)) {
      rows.push_back(Json{{"d", c.d},
                          {"h1_order", json_int(c.snf_order)},
                          {"resultant", json_int(c.resultant)},
                          {"agree", c.agree}});
      text << sweep_line(c) << "\n";
      all_agree = all_agree && c.agree;
    }
    j["sweep"] = std::move(rows);
  }
  if (a.json)
    out << j.dump(2) << "\n";
  else
    out << text.str();
  return all_agree ? kExitOk : kExitFailure;
}

// --- resultant -------------------------------------------------------------

struct ResultantArgs {
  Source src;
  std::string poly;
  unsigned d = 0;
  unsigned sweep = 0;
  bool json = false;
};

int cmd_resultant(const ResultantArgs& a, std::ostream& out) {
  if (a.d == 0 && a.sweep == 0) throw UsageError("give --d or --sweep");
  std::optional<SeifertMatrix> seifert;
  LaurentPoly p;
  if (!a.poly.empty()) {
    if (!a.src.file.empty() || !a.src.fixture.empty())
      throw UsageError("give either --poly or a Seifert matrix, not both");
    p = parse_laurent(a.poly);
    if (p.is_zero()) throw UsageError("resultant of the zero polynomial");
  } else {
    seifert = parse_seifert(load_text(a.src, FixtureKind::seifert));
    p = alexander_polynomial(*seifert).poly();
  }
  Json j{{"command", "resultant"}, {"poly", to_string(canonicalize(p), 't')}};
  std::ostringstream text;
  text << "poly = " << to_string(canonicalize(p), 't') << "\n";
  bool all_agree = true;
  if (a.d > 0) {
    Integer res = resultant_with_cyclotomic(p, a.d);
    j["d"] = a.d;
    j["resultant"] = json_int(res);
    text << "d = " << a.d << ": resultant = " << res << "\n";
  }
  if (a.sweep > 0) {
    Json rows = Json::array();
    if (seifert) {
      for (const auto& c : resultant_sweep(*seifert, a.sweep)) {
        rows.push_back(Json{{"d", c.d},
                            {"h1_order", json_int(c.snf_order)},
                            {"resultant", json_int(c.resultant)},
                            {"agree", c.agree}});
        text << sweep_line(c) << "\n";
        all_agree = all_agree && c.agree;
      }
    } else {
      for (unsigned d = 2; d <= a.sweep; ++d) {
        Integer res = resultant_with_cyclotomic(p, d);
        rows.push_back(Json{{"d", d}, {"resultant", json_int(res)}});
        text << "d = " << d << ": resultant = " << res << "\n";
      }
    }
    j["sweep"] = std::move(rows);
  }
  if (a.json)
    out << j.dump(2) << "\n";
  else
    out << text.str();
  return all_agree ? kExitOk : kExitFailure;
}

// --- homcheck --------------------------------------------------------------

struct HomcheckArgs {
  std::string fixture;
  std::string presentation;
  std::string hom;
  bool json = false;
};

int cmd_homcheck(const HomcheckArgs& a, std::ostream& out) {
  std::string pres_text;
  std::string hom_text;
  if (!a.fixture.empty()) {
    if (!a.presentation.empty() || !a.hom.empty())
      throw UsageError("give either --fixture or --presentation/--hom");
    const Fixture& f = find_fixture(a.fixture);
    if (f.kind != FixtureKind::homcheck)
      throw UsageError("fixture '" + a.fixture + "' has the wrong kind");
    pres_text = f.text;
    hom_text = f.hom_text;
  } else {
    if (a.presentation.empty() || a.hom.empty())
      throw UsageError("--presentation and --hom are both required");
    pres_text = read_file(a.presentation);
    hom_text = read_file(a.hom);
  }
  NamedPresentation pres = parse_presentation(pres_text);
  FiniteHom hom = parse_hom(hom_text, pres.names);
  auto failed = verify_homomorphism(hom, pres.presentation);
  std::uint64_t order = generated_subgroup_order(hom);
  bool surjective = order == hom.target().order();
  std::size_t total = pres.presentation.relators.size();
  std::size_t ok = total - failed.size();

  if (a.json) {
    Json f = Json::array();
    for (auto k : failed) f.push_back(k + 1);
    Json j{{"command", "homcheck"},
           {"target", hom.target().name()},
           {"relations_total", total},
           {"relations_ok", ok},
           {"failed_relators", std::move(f)},
           {"image_order", order},
           {"surjective", surjective}};
    out << j.dump(2) << "\n";
  } else {
    out << "relations: " << ok << "/" << total << " ok";
    if (!failed.empty()) {
      out << " (failed:";
      for (auto k : failed) out << " " << k + 1;
      out << ")";
    }
    out << "; image order = " << order << (surjective ? " (surjective)" : " (not surjective)")
        << "\n";
  }
  return failed.empty() ? kExitOk : kExitFailure;
}

// --- report ----------------------------------------------------------------

int cmd_report(const std::string& path, bool json, std::ostream& out) {
  LambdaMatrix p = parse_lambda_matrix(read_file(path));
  ObstructionReport r = evaluate_fibred_obstruction(p, minor_cap());
  if (json) {
    Json j{{"command", "report"}, {"rows", p.rows()}, {"cols", p.cols()}};
    report_fields(r, j);
    out << j.dump(2) << "\n";
  } else {
    out << "presentation: " << p.rows() << " x " << p.cols() << "\n";
    print_report(r, out);
  }
  return exit_code_for(r.verdict);
}

// --- selftest --------------------------------------------------------------

int cmd_selftest(std::ostream& out) {
  int failures = 0;
  auto check = [&](const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception& e) {
      out << "  error: " << e.what() << "\n";
    }
    out << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };
  auto trefoil = [] { return parse_monodromy(find_fixture("trefoil-monodromy").text); };
  auto seifert = [](std::string_view n) { return parse_seifert(find_fixture(n).text); };

  check("trefoil-monodromy: d=2, Z/3 -> delta = s^4 - s^3 - s + 1, det H = 1", [&] {
    NamedEndo m = trefoil();
    auto inv = twisted_invariants(m.endo, 2, parse_inline_alpha("Z/3:x=1,y=1", m.names));
    return to_string(inv.delta) == "s^4 - s^3 - s + 1" && inv.det_h == 1 &&
           inv.h_matrix.rows() == 4 &&
           evaluate_fibred_obstruction(inv).verdict == Verdict::consistent_with_fibred;
  });
  check("trefoil-monodromy: coker(T^2 - I) = Z/3", [&] {
    return branched_cover_homology_from_monodromy(trefoil().endo, 2).to_string() == "Z/3";
  });
  check("trefoil-seifert: d=2 -> Z/3, resultant 3", [&] {
    auto c = resultant_order_check(seifert("trefoil-seifert"), 2);
    return branched_homology(seifert("trefoil-seifert"), 2).to_string() == "Z/3" &&
           c.resultant == 3 && c.agree;
  });
  check("figure8-seifert: H = [[2, -1], [-1, 1]], det(H^2 - I) = -5", [&] {
    auto mp = monodromy_power_presentation(seifert("figure8-seifert"), 2);
    return to_string(mp.h) == "[[2, -1], [-1, 1]]" && mp.det == -5;
  });
  check("figure8-seifert: d=2 -> Z/5, resultant 5", [&] {
    auto c = resultant_order_check(seifert("figure8-seifert"), 2);
    return branched_homology(seifert("figure8-seifert"), 2).to_string() == "Z/5" &&
           c.resultant == 5 && c.agree;
  });
  check("paper-s5: 14/14 relators killed, image order 60", [&] {
    const Fixture& f = find_fixture("paper-s5");
    NamedPresentation pres = parse_presentation(f.text);
    FiniteHom hom = parse_hom(f.hom_text, pres.names);
    return pres.presentation.relators.size() == 14 &&
           verify_homomorphism(hom, pres.presentation).empty() &&
           generated_subgroup_order(hom) == 60;
  });
  out << (failures == 0 ? "selftest: all passed" : "selftest: " + std::to_string(failures) + " failed")
      << "\n";
  return failures == 0 ? kExitOk : kExitFailure;
}

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("--file", src.file, "input file");
  cmd->add_option("--fixture", src.fixture, "built-in fixture name");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"twisted Alexander invariants and fibredness obstructions", "twist"};
  app.require_subcommand(1);

  MonodromyArgs mono;
  auto* c_mono = app.add_subcommand("monodromy", "twisted invariants of a fibred knot from its monodromy");
  add_source(c_mono, mono.src);
  c_mono->add_option("--d", mono.d, "cyclic cover degree")->check(CLI::PositiveNumber);
  c_mono->add_option("--alpha", mono.alpha, "Z/r:x=a,... or a homomorphism file");
  c_mono->add_flag("--json", mono.json);

  SeifertArgs seif;
  auto* c_seif = app.add_subcommand("seifert", "branched-cover invariants from a Seifert matrix");
  add_source(c_seif, seif.src);
  c_seif->add_option("--d", seif.d, "branched cover degree (>= 2)");
  c_seif->add_option("--r", seif.r, "cyclic quotient order for the character jump");
  c_seif->add_option("--sweep", seif.sweep, "resultant/homology table for d = 2..N");
  c_seif->add_option("--n", seif.n, "report H = S^-1 S^T and det(H^n - I)");
  c_seif->add_flag("--json", seif.json);

  ResultantArgs res;
  auto* c_res = app.add_subcommand("resultant", "|Res(p, t^d - 1)| for a polynomial or Seifert matrix");
  add_source(c_res, res.src);
  c_res->add_option("--poly", res.poly, "Laurent polynomial");
  c_res->add_option("--d", res.d, "root-of-unity order");
  c_res->add_option("--sweep", res.sweep, "table for d = 2..N");
  c_res->add_flag("--json", res.json);

  HomcheckArgs hc;
  auto* c_hc = app.add_subcommand("homcheck", "verify a homomorphism kills a presentation");
  c_hc->add_option("--fixture", hc.fixture, "built-in fixture name");
  c_hc->add_option("--presentation", hc.presentation, "presentation file");
  c_hc->add_option("--hom", hc.hom, "homomorphism file");
  c_hc->add_flag("--json", hc.json);

  std::string report_path;
  bool report_json = false;
  auto* c_rep = app.add_subcommand("report", "fibredness obstruction for a presentation matrix");
  c_rep->add_option("--presentation", report_path, "Z[s,s^-1] matrix file")->required();
  c_rep->add_flag("--json", report_json);

  auto* c_self = app.add_subcommand("selftest", "reproduce the built-in fixture numbers");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_mono->parsed()) return cmd_monodromy(mono, out);
    if (c_seif->parsed()) return cmd_seifert(seif, out);
    if (c_res->parsed()) return cmd_resultant(res, out);
    if (c_hc->parsed()) return cmd_homcheck(hc, out);
    if (c_rep->parsed()) return cmd_report(report_path, report_json, out);
    if (c_self->parsed()) return cmd_selftest(out);
  } catch (const SizeLimitError& e) {
    err << "twist: size limit: " << e.what() << "\n";
    return kExitSizeCap;
  } catch (const ParseError& e) {
    err << "twist: parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownFixture& e) {
    err << "twist: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "twist: invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "twist: precondition failed: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "twist: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace twist::cli
