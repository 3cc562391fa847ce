#pragma once

#include "segre/numeric.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace segre {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A monomial ideal given by exponent vectors of its generators.
/// Generators are kept lexicographically sorted and deduplicated; a zero
/// exponent vector marks the unit ideal (empty subscheme, zero class).
struct MonomialIdealSpec {
  int n = 0;
  std::vector<IVec> generators;
  std::vector<std::string> labels;  // optional display names, may be empty
  bool unit_ideal = false;
};

/// Canonicalize a generator list: validate, sort, deduplicate, flag unit.
MonomialIdealSpec make_spec(int n, std::vector<IVec> generators);

/// Parse "x1^2*x2^6, x1^7" or whitespace-separated integer rows (one
/// exponent vector per row / comma-separated). A bare "1" is the empty
/// product, i.e. the unit ideal. The variable count is inferred from the
/// highest index unless given.
MonomialIdealSpec parse_ideal(const std::string& text,
                              std::optional<int> n = std::nullopt);

/// Keep only generators that are vertices of the Newton polyhedron; the
/// region, hence the class, is unchanged. Unit ideals pass through.
MonomialIdealSpec minimalize(const MonomialIdealSpec& spec);

/// Relabel variables: generator entry i moves to position perm[i].
MonomialIdealSpec permute_variables(const MonomialIdealSpec& spec,
                                    const std::vector<int>& perm);

}  // namespace segre
