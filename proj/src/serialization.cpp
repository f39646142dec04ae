#include "terracini/serialization.hpp"

#include <fstream>
#include <sstream>

namespace terracini {

namespace {

[[noreturn]] void structural(const std::string& pointer, const std::string& what) {
  throw ParseError("parse error at " + (pointer.empty() ? std::string("/") : pointer) + ": " + what,
                   0, 0, pointer);
}

// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Vec read_vector(const PrimeField& f, const Json& j, const std::string& ptr, std::size_t len) {
  if (!j.is_array()) structural(ptr, "expected an array of integers");
  if (j.size() != len) structural(ptr, "expected " + std::to_string(len) + " coordinates, got " +
                                           std::to_string(j.size()));
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& e = j[i];
    const auto p = ptr + "/" + std::to_string(i);
    if (e.is_number_unsigned()) v.push_back(f.reduce_u(e.get<std::uint64_t>()));
    else if (e.is_number_integer()) v.push_back(f.reduce(e.get<std::int64_t>()));
    else structural(p, "expected an integer");
  }
  return v;
}

Point read_point(const PrimeField& f, const Json& j, const std::string& ptr, std::size_t len) {
  auto v = read_vector(f, j, ptr, len);
  for (auto e : v)
    if (e != 0) return Point::normalized(f, std::move(v));
  structural(ptr, "all coordinates vanish");
}

Json vec_json(const Vec& v) { return Json(std::vector<std::uint64_t>(v.begin(), v.end())); }

Json vecs_json(const std::vector<Vec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(vec_json(v));
  return a;
}

}  // namespace

ZeroDimScheme SchemeInput::scheme() const {
  if (is_point_set) return double_scheme(field, points);
  return ZeroDimScheme(field, n, components);
}

SchemeInput parse_scheme(std::string_view text, std::optional<std::uint64_t> prime) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
    std::ostringstream os;
    os << "parse error at line " << line << ", column " << col << ": " << e.what();
    throw ParseError(os.str(), line, col, "");
  }
  if (!doc.is_object()) structural("", "expected an object");

  std::uint64_t p = kDefaultPrime;
  if (doc.contains("prime")) {
    if (!doc["prime"].is_number_unsigned()) structural("/prime", "expected a positive integer");
    p = doc["prime"].get<std::uint64_t>();
  }
  if (prime) p = *prime;
  if (!is_prime(p) || p >= (1ULL << 32)) structural("/prime", "not a prime below 2^32");
  SchemeInput in;
  in.field = PrimeField(p);

  if (doc.contains("d")) {
    if (!doc["d"].is_number_integer() || doc["d"].get<std::int64_t>() < 1)
      structural("/d", "expected a positive integer");
    in.d = doc["d"].get<int>();
  }

  const bool has_points = doc.contains("points");
  const bool has_comps = doc.contains("components");
  if (has_points == has_comps) structural("", "expected exactly one of \"points\" and \"components\"");
  const auto& list = has_points ? doc["points"] : doc["components"];
  const std::string key = has_points ? "/points" : "/components";
  if (!list.is_array() || list.empty()) structural(key, "expected a non-empty array");

  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<std::int64_t>() < 1)
      structural("/n", "expected a positive integer");
    in.n = doc["n"].get<int>();
  } else {
    const auto& first = has_points ? list[0] : list[0].value("point", Json());
    if (!first.is_array() || first.size() < 2) structural(key + "/0", "cannot infer n");
    in.n = static_cast<int>(first.size()) - 1;
  }
  const std::size_t len = static_cast<std::size_t>(in.n + 1);

  try {
    if (has_points) {
      in.is_point_set = true;
      for (std::size_t i = 0; i < list.size(); ++i) {
        auto pt = read_point(in.field, list[i], key + "/" + std::to_string(i), len);
        for (const auto& q : in.points)
          if (q == pt) structural(key + "/" + std::to_string(i), "DuplicatePoint");
        in.points.push_back(std::move(pt));
      }
      return in;
    }
    ZeroDimScheme check(in.field, in.n);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto ptr = key + "/" + std::to_string(i);
      const auto& c = list[i];
      if (!c.is_object()) structural(ptr, "expected an object");
      if (!c.contains("kind") || !c["kind"].is_string()) structural(ptr + "/kind", "expected a string");
      if (!c.contains("point")) structural(ptr + "/point", "missing");
      const auto kind = c["kind"].get<std::string>();
      auto base = read_point(in.field, c["point"], ptr + "/point", len);
      auto make = [&]() -> Component {
        if (kind == "simple") return Component::simple(std::move(base));
        if (kind == "double") return Component::doubled(std::move(base));
        if (kind != "jet") structural(ptr + "/kind", "unknown kind \"" + kind + "\"");
        if (!c.contains("direction")) structural(ptr + "/direction", "missing");
        auto v = read_vector(in.field, c["direction"], ptr + "/direction", len);
        if (!normalize_direction(in.field, base, v))
          structural(ptr + "/direction", "direction is proportional to the point");
        return Component::jet(in.field, std::move(base), std::move(v));
      };
      Component comp = make();
      try {
        check.add(comp);
      } catch (const DuplicatePoint&) {
        structural(ptr, "DuplicatePoint");
      }
      in.components.push_back(std::move(comp));
    }
  } catch (const nlohmann::json::exception& e) {
    structural(key, e.what());
  }
  return in;
}

SchemeInput load_scheme(const std::string& path, std::optional<std::uint64_t> prime) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0, 0, "");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scheme(ss.str(), prime);
}

Json to_json(const Point& p) { return vec_json(p.coords()); }

Json to_json(const Component& c) {
  Json j{{"kind", kind_name(c.kind)}, {"point", to_json(c.base)}};
  if (c.kind == ComponentKind::Jet) j["direction"] = vec_json(c.direction);
  return j;
}

Json to_json(const ZeroDimScheme& z) {
  Json comps = Json::array();
  for (const auto& c : z.components()) comps.push_back(to_json(c));
  return {{"n", z.n()}, {"prime", z.field().modulus()}, {"degree", z.degree()}, {"components", comps}};
}

Json to_json(const CohomologyReport& r) {
  Json j{{"n", r.n},         {"d", r.d},           {"scheme_degree", r.scheme_degree},
         {"rank", r.rank},   {"h0", r.h0},         {"h1", r.h1},
         {"primes", r.primes}, {"per_prime_rank", r.per_prime_rank},
         {"disagreement", r.disagreement}};
  return j;
}

Json to_json(const MembershipCertificate& c) {
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back(to_json(p));
  Json j{{"n", c.n},
         {"d", c.d},
         {"prime", c.prime},
         {"x", c.points.size()},
         {"points", pts},
         {"h0", c.h0},
         {"h1", c.h1},
         {"span_dim", c.span_dim},
         {"t1", c.t1},
         {"terracini", c.terracini},
         {"minimality_checked", c.minimality_checked},
         {"minimal", c.minimal},
         {"subset_h1", c.subset_h1},
         {"violating_subset", c.violating_subset},
         {"refutation", c.refutation}};
  return j;
}

Json to_json(const BoundVerdict& b) {
  return {{"name", b.name}, {"passed", b.passed}, {"detail", b.detail}};
}

Json to_json(const CriticalScheme& c) {
  return {{"d", c.d},
          {"h1", c.h1},
          {"full_support", c.full_support},
          {"scheme", to_json(c.scheme)},
          {"kernel_vector", vec_json(c.kernel_vector)}};
}

Json to_json(const Witness& w) {
  Json j{{"kind", witness_kind_name(w.kind)},
         {"achieved", w.achieved},
         {"threshold", w.threshold},
         {"candidates", w.candidates},
         {"budget_exhausted", w.budget_exhausted}};
  if (w.kind != WitnessKind::None) j["span"] = vecs_json(w.span);
  if (!w.form.empty()) {
    j["form"] = vec_json(w.form);
    j["form_degree"] = w.form_degree;
  }
  if (w.d_maximal) j["d_maximal"] = *w.d_maximal;
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

Json to_json(const CurveSample& s) {
  Json pts = Json::array();
  for (const auto& p : s.points) pts.push_back(to_json(p));
  return {{"kind", curve_kind_name(s.spec.kind)},
          {"n", s.spec.n},
          {"genus", s.spec.genus},
          {"degree", s.spec.degree},
          {"segments", s.spec.segments},
          {"forms", vecs_json(s.spec.forms)},
          {"transform", vecs_json(s.spec.transform)},
          {"parameters", vec_json(s.spec.parameters)},
          {"points", pts},
          {"smooth", s.smooth},
          {"retries", s.retries}};
}

Json point_set_document(const PrimeField& f, std::span<const Point> s, std::optional<int> d) {
  Json pts = Json::array();
  for (const auto& p : s) pts.push_back(to_json(p));
  Json j{{"n", s.empty() ? 0 : s.front().ambient_dim()}, {"prime", f.modulus()}, {"points", pts}};
  if (d) j["d"] = *d;
  return j;
}

}  // namespace terracini
