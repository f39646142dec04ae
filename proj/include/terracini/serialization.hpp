#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "terracini/constructions.hpp"
#include "terracini/critical.hpp"
#include "terracini/membership.hpp"
#include "terracini/witness.hpp"

namespace terracini {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Malformed input. Syntax errors carry a 1-based line and column; structural
/// errors carry the JSON pointer of the offending value and line 0.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column, std::string pointer)
      : Error(what), line_(line), column_(column), pointer_(std::move(pointer)) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string pointer_;
};

/// A point set or scheme read from JSON:
///
///   {"n": 3, "prime": 2147483647, "d": 7, "points": [[1, 2, 3, 4], ...]}
///   {"n": 2, "components": [{"kind": "jet", "point": [1, 0, 0], "direction": [0, 1, 0]}, ...]}
///
/// Coordinates are integers, reduced modulo the prime; "prime" and "d" are
/// optional.
struct SchemeInput {
  PrimeField field;
  int n = 0;
  std::optional<int> d;
  /// Set for a "points" document.
  std::vector<Point> points;
  std::vector<Component> components;
  bool is_point_set = false;

  /// 2S for a point set, the listed components otherwise.
  ZeroDimScheme scheme() const;
};

/// `prime` overrides the document's prime.
SchemeInput parse_scheme(std::string_view text, std::optional<std::uint64_t> prime = {});
/// Throws ParseError when the file cannot be read as well.
SchemeInput load_scheme(const std::string& path, std::optional<std::uint64_t> prime = {});

Json to_json(const Point& p);
Json to_json(const Component& c);
Json to_json(const ZeroDimScheme& z);
Json to_json(const CohomologyReport& r);
Json to_json(const MembershipCertificate& c);
Json to_json(const BoundVerdict& b);
Json to_json(const CriticalScheme& c);
Json to_json(const Witness& w);
Json to_json(const CurveSample& s);

/// Point-set document readable by parse_scheme.
Json point_set_document(const PrimeField& f, std::span<const Point> s, std::optional<int> d = {});

}  // namespace terracini
