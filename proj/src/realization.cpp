#include "rigidity/realization.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>

namespace rigidity {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

constexpr std::int64_t max_coordinate = std::int64_t{1} << 31;

bool integer_general_position(const std::vector<std::int64_t>& xs,
                              const std::vector<std::int64_t>& ys) {
  const std::size_t n = xs.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const __int128 dxb = xs[b] - xs[a], dyb = ys[b] - ys[a];
      for (std::size_t c = b + 1; c < n; ++c) {
        const __int128 dxc = xs[c] - xs[a], dyc = ys[c] - ys[a];
        if (dxb * dyc - dyb * dxc == 0) return false;
      }
    }
  }
  return true;
}

nlohmann::json integer_to_json(const BigInt& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

BigInt integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
    return BigInt(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("realization json: expected an integer");
}

Rational rational_from_json(const nlohmann::json& pair) {
  if (!pair.is_array() || pair.size() != 2) {
    throw std::invalid_argument("realization json: expected [numerator, denominator]");
  }
  BigInt den = integer_from_json(pair[1]);
  if (sgn(den) == 0) throw std::invalid_argument("realization json: zero denominator");
  Rational q(integer_from_json(pair[0]), den);
  q.canonicalize();
  return q;
}

}  // namespace

RationalRealization sample_rational_realization(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.vertex_count();
  std::vector<std::int64_t> xs(n), ys(n);
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::mt19937_64 rng(derive_seed(seed, attempt));
    std::uniform_int_distribution<std::int64_t> coord(1, max_coordinate);
    for (std::size_t v = 0; v < n; ++v) {
      xs[v] = coord(rng);
      ys[v] = coord(rng);
    }
    if (integer_general_position(xs, ys)) break;
    if (attempt > 1000) throw std::runtime_error("sample_rational_realization: no general position");
  }
  RationalRealization r;
  r.points.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    r.points.push_back({Rational(static_cast<long>(xs[v])), Rational(static_cast<long>(ys[v]))});
  }
  return r;
}

FieldRealization sample_field_realization(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coord(0, Fp::modulus - 1);
  FieldRealization r;
  r.points.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    Fp x(coord(rng));
    Fp y(coord(rng));
    r.points.push_back({x, y});
  }
  return r;
}

AnyRealization sample_generic_realization(const Graph& g, std::uint64_t seed,
                                          ScalarDomain domain) {
  if (domain == ScalarDomain::rational) return sample_rational_realization(g, seed);
  return sample_field_realization(g, seed);
}

bool is_general_position(const RationalRealization& r) {
  const auto& p = r.points;
  const std::size_t n = p.size();
  bool integral = std::all_of(p.begin(), p.end(), [](const Point<Rational>& q) {
    return q.x.get_den() == 1 && q.y.get_den() == 1 && q.x.get_num().fits_slong_p() &&
           q.y.get_num().fits_slong_p() && abs(q.x.get_num()) < max_coordinate * 4 &&
           abs(q.y.get_num()) < max_coordinate * 4;
  });
  if (integral) {
    std::vector<std::int64_t> xs(n), ys(n);
    for (std::size_t v = 0; v < n; ++v) {
      xs[v] = p[v].x.get_num().get_si();
      ys[v] = p[v].y.get_num().get_si();
    }
    return integer_general_position(xs, ys);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Rational dxb = p[b].x - p[a].x, dyb = p[b].y - p[a].y;
      for (std::size_t c = b + 1; c < n; ++c) {
        const Rational det = dxb * (p[c].y - p[a].y) - dyb * (p[c].x - p[a].x);
        if (sgn(det) == 0) return false;
      }
    }
  }
  return true;
}

bool is_general_position(const AnyRealization& r) {
  if (const auto* rational = std::get_if<RationalRealization>(&r)) {
    return is_general_position(*rational);
  }
  throw std::invalid_argument("is_general_position: undefined for prime-field realizations");
}

nlohmann::json realization_to_json(const AnyRealization& r) {
  nlohmann::json j;
  if (const auto* rational = std::get_if<RationalRealization>(&r)) {
    j["domain"] = "rational";
    auto coords = nlohmann::json::array();
    for (const auto& p : rational->points) {
      coords.push_back({{integer_to_json(p.x.get_num()), integer_to_json(p.x.get_den())},
                        {integer_to_json(p.y.get_num()), integer_to_json(p.y.get_den())}});
    }
    j["coords"] = std::move(coords);
  } else {
    const auto& field = std::get<FieldRealization>(r);
    j["domain"] = "prime_field";
    j["prime"] = Fp::modulus;
    auto coords = nlohmann::json::array();
    for (const auto& p : field.points) coords.push_back({p.x.value(), p.y.value()});
    j["coords"] = std::move(coords);
  }
  return j;
}

AnyRealization realization_from_json(const nlohmann::json& j) {
  const std::string domain = j.at("domain").get<std::string>();
  const auto& coords = j.at("coords");
  if (!coords.is_array()) throw std::invalid_argument("realization json: coords must be an array");
  if (domain == "rational") {
    RationalRealization r;
    for (const auto& entry : coords) {
      if (!entry.is_array() || entry.size() != 2) {
        throw std::invalid_argument("realization json: each vertex needs [x, y]");
      }
      r.points.push_back({rational_from_json(entry[0]), rational_from_json(entry[1])});
    }
    return r;
  }
  if (domain == "prime_field") {
    if (j.at("prime").get<std::uint64_t>() != Fp::modulus) {
      throw std::invalid_argument("realization json: unsupported prime");
    }
    FieldRealization r;
    for (const auto& entry : coords) {
      if (!entry.is_array() || entry.size() != 2) {
        throw std::invalid_argument("realization json: each vertex needs [x, y]");
      }
      const auto x = entry[0].get<std::uint64_t>(), y = entry[1].get<std::uint64_t>();
      if (x >= Fp::modulus || y >= Fp::modulus) {
        throw std::invalid_argument("realization json: field element out of range");
      }
      r.points.push_back({Fp(x), Fp(y)});
    }
    return r;
  }
  throw std::invalid_argument("realization json: unknown domain '" + domain + "'");
}

void write_svg(std::ostream& out, const Graph& g, const RationalRealization& r) {
  if (r.size() != g.vertex_count()) throw std::invalid_argument("write_svg: size mismatch");
  constexpr double viewport = 1000.0, margin = 0.05 * viewport;
  std::vector<double> xs, ys;
  for (const auto& p : r.points) {
    xs.push_back(p.x.get_d());
    ys.push_back(p.y.get_d());
  }
  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  if (!xs.empty()) {
    std::tie(min_x, max_x) = std::pair(*std::min_element(xs.begin(), xs.end()),
                                       *std::max_element(xs.begin(), xs.end()));
    std::tie(min_y, max_y) = std::pair(*std::min_element(ys.begin(), ys.end()),
                                       *std::max_element(ys.begin(), ys.end()));
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
  const double scale = (viewport - 2 * margin) / span;
  auto sx = [&](double x) { return margin + (x - min_x) * scale; };
  auto sy = [&](double y) { return viewport - margin - (y - min_y) * scale; };

  out << std::fixed << std::setprecision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
         "viewBox=\"0 0 1000 1000\">\n";
  for (const Edge& e : g.edges()) {
    out << "  <line x1=\"" << sx(xs[e.u]) << "\" y1=\"" << sy(ys[e.u]) << "\" x2=\""
        << sx(xs[e.v]) << "\" y2=\"" << sy(ys[e.v]) << "\" stroke=\"black\"/>\n";
  }
  for (std::size_t v = 0; v < xs.size(); ++v) {
    out << "  <circle cx=\"" << sx(xs[v]) << "\" cy=\"" << sy(ys[v])
        << "\" r=\"6\" fill=\"white\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << sx(xs[v]) + 8 << "\" y=\"" << sy(ys[v]) - 8
        << "\" font-size=\"14\">" << v << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace rigidity
