#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "rigidity/dense_matrix.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/prime_field.hpp"

namespace rigidity {

enum class ScalarDomain { rational, prime_field };

template <class Scalar>
struct Point {
  Scalar x;
  Scalar y;
};

/// Planar placement of the vertices, one point per vertex id.
template <class Scalar>
struct Realization {
  std::vector<Point<Scalar>> points;
  std::size_t size() const { return points.size(); }
};

using RationalRealization = Realization<Rational>;
using FieldRealization = Realization<Fp>;
using AnyRealization = std::variant<RationalRealization, FieldRealization>;

/// Integer coordinates uniform in [1, 2^31], resampled until no three points
/// are collinear. Deterministic in seed.
RationalRealization sample_rational_realization(const Graph& g, std::uint64_t seed);
/// Coordinates uniform in F_p. Deterministic in seed.
FieldRealization sample_field_realization(const Graph& g, std::uint64_t seed);
AnyRealization sample_generic_realization(const Graph& g, std::uint64_t seed, ScalarDomain domain);

/// No three points on a common line (orientation determinant nonzero).
bool is_general_position(const RationalRealization& r);
/// Throws std::invalid_argument for field realizations, which carry no geometry.
bool is_general_position(const AnyRealization& r);

/// Rational: {"domain":"rational","coords":[[[xn,xd],[yn,yd]],...]}.
/// Field: {"domain":"prime_field","prime":p,"coords":[[x,y],...]}.
/// Integers that do not fit in 64 bits are written as decimal strings.
nlohmann::json realization_to_json(const AnyRealization& r);
AnyRealization realization_from_json(const nlohmann::json& j);

/// Draws the graph at the realization inside a 1000x1000 viewport with a 5%
/// margin. Cosmetic only.
void write_svg(std::ostream& out, const Graph& g, const RationalRealization& r);

/// Mixes a base seed with a stream index (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace rigidity
