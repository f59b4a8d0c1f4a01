#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twist/exactla.hpp"
#include "twist/freegrp.hpp"
#include "twist/grouphom.hpp"
#include "twist/seifert.hpp"

namespace twist {

/// Generator names alongside the structure they label.
struct NamedEndo {
  std::vector<std::string> names;
  FreeEndo endo;
};

struct NamedPresentation {
  std::vector<std::string> names;
  Presentation presentation;
};

/// Whitespace-separated letters `x`, `x^-1`, `x^3`; `1` is the empty word.
/// `line` is only used for error positions.
Word parse_word(std::string_view text, const std::vector<std::string>& names,
                std::size_t line = 1, std::size_t column_offset = 0);
std::string format_word(const Word& w, const std::vector<std::string>& names);

/// `generators: x y`, then one `x -> <word>` line per generator.
NamedEndo parse_monodromy(std::string_view text);
std::string format_monodromy(const NamedEndo& m);

/// First line `rows cols`, then row-major integer entries.
IntMatrix parse_int_matrix(std::string_view text);
/// Same layout, entries are polynomial tokens without spaces (`s-1`, `2s^-1`).
LambdaMatrix parse_lambda_matrix(std::string_view text);
std::string format_int_matrix(const IntMatrix& m);
std::string format_lambda_matrix(const LambdaMatrix& m);

/// First line `2g`, then 2g rows of integers. Validates det(S - S^T) = +-1.
SeifertMatrix parse_seifert(std::string_view text);
std::string format_seifert(const SeifertMatrix& s);

/// `generators: ...`, then `relator: <word>` lines.
NamedPresentation parse_presentation(std::string_view text);
std::string format_presentation(const NamedPresentation& p);

/// `target: A5` (or `Z/6`, `S4`), then `a = (1 3 2)` or `a = 4` per
/// generator, in any order; every name must be assigned exactly once.
FiniteHom parse_hom(std::string_view text, const std::vector<std::string>& names);
std::string format_hom(const FiniteHom& h, const std::vector<std::string>& names);

/// Inline cyclic homomorphism `Z/r:x=a,y=b`.
FiniteHom parse_inline_alpha(std::string_view text, const std::vector<std::string>& names);

/// Reads a whole file. Throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace twist
