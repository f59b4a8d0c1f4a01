#include "twist/fixtures.hpp"

#include <array>

namespace twist {

namespace {

// Trefoil fibre: bouquet on x, y with h(x) = y^-1, h(y) = x y.
constexpr std::string_view kTrefoilMonodromy =
    "generators: x y\n"
    "x -> y^-1\n"
    "y -> x y\n";

constexpr std::string_view kTrefoilSeifert =
    "2\n"
    "-1 1\n"
    "0 -1\n";

constexpr std::string_view kFigure8Seifert =
    "2\n"
    "1 1\n"
    "0 -1\n";

// Wirtinger presentation of the double branched cover surgery diagram,
// twelve crossing relations written as relators, then the two surgery
// relations.
constexpr std::string_view kPaperS5Presentation =
    "generators: a b c d e f p q r s t u\n"
    "relator: q^-1 f q a^-1\n"
    "relator: p^-1 a p b^-1\n"
    "relator: e^-1 b e c^-1\n"
    "relator: s c s^-1 d^-1\n"
    "relator: r d r^-1 e^-1\n"
    "relator: b^-1 e b f^-1\n"
    "relator: b^-1 u b p^-1\n"
    "relator: a^-1 p a q^-1\n"
    "relator: t^-1 q t r^-1\n"
    "relator: d r d^-1 s^-1\n"
    "relator: c s c^-1 t^-1\n"
    "relator: q^-1 t q u^-1\n"
    "relator: q p e s^-1 r^-1 b f^-1\n"
    "relator: b a t d^-1 c^-1 q u^-1\n";

constexpr std::string_view kPaperS5Hom =
    "target: A5\n"
    "a = (1 3 2)\n"
    "b = (1 4 2)\n"
    "c = (1 2 5)\n"
    "d = (2 4 3)\n"
    "e = (1 4 5)\n"
    "f = (1 5 2)\n"
    "p = (1 3 5 4 2)\n"
    "q = (1 5 4 3 2)\n"
    "r = (1 2 5 3 4)\n"
    "s = (1 4 5 2 3)\n"
    "t = (1 5 3 2 4)\n"
    "u = (1 4 3 5 2)\n";

constexpr std::array<Fixture, 4> kFixtures{{
    {"trefoil-monodromy", FixtureKind::monodromy, kTrefoilMonodromy, {}},
    {"trefoil-seifert", FixtureKind::seifert, kTrefoilSeifert, {}},
    {"figure8-seifert", FixtureKind::seifert, kFigure8Seifert, {}},
    {"paper-s5", FixtureKind::homcheck, kPaperS5Presentation, kPaperS5Hom},
}};

}  // namespace

std::span<const Fixture> fixtures() { return kFixtures; }

const Fixture& find_fixture(std::string_view name) {
  for (const auto& f : kFixtures)
    if (f.name == name) return f;
  throw UnknownFixture(std::string(name));
}

}  // namespace twist
