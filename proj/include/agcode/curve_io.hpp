#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "agcode/coordinate_ring.hpp"
#include "agcode/linalg.hpp"

namespace agcode {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Curve file (JSON):
///   { "name": "...",
///     "field": {"p": 2, "m": 2, "modulus": [1, 1, 1]},   // low to high
///     "weights": [2, 3],
///     "ideal_basis": [ [[[0, 2], 1], [[0, 1], 1], [[3, 0], 1]] ],
///     "genus": 1,
///     "vanishing_x1_poly": [0, 1, 0, 0, 1],              // optional
///     "points": [[0, 0], [0, 1], ...] }                    // optional
/// Each ideal-basis polynomial is a list of [exponent tuple, coefficient].
CurveSpec parse_curve(const nlohmann::json& j);
CurveSpec load_curve(const std::string& path);
nlohmann::json curve_to_json(const CurveSpec& spec);

/// The evaluation points: the explicit list if the curve file has one (each
/// checked to lie on the curve, pairwise distinct), otherwise every affine
/// solution in F_q^t in lexicographic order of encodings.
std::vector<Point> resolve_points(const StandardForm& ring);

/// Whitespace-separated integer encodings; '#' starts a comment.
Vector parse_vector(const std::string& text, const Field& F);
Vector read_vector(const std::string& path, const Field& F);
std::string format_vector(const Vector& v);
/// One point per line, t encodings each.
std::vector<Point> read_points(const std::string& path, const Field& F, std::size_t t);

}  // namespace agcode
