#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace twist {

enum class FixtureKind { monodromy, seifert, homcheck };

/// Built-in example data, stored in the same text formats the CLI reads.
struct Fixture {
  std::string_view name;
  FixtureKind kind;
  std::string_view text;      // monodromy, Seifert matrix, or presentation
  std::string_view hom_text;  // homcheck only: the homomorphism
};

class UnknownFixture : public std::invalid_argument {
 public:
  explicit UnknownFixture(const std::string& name)
      : std::invalid_argument("unknown fixture '" + name + "'") {}
};

std::span<const Fixture> fixtures();
const Fixture& find_fixture(std::string_view name);

}  // namespace twist
