#include "hitchin/json_io.hpp"

#include <fstream>
#include <set>

namespace hitchin {

namespace {

[[noreturn]] void fail(const std::string& what) { throw SchemaError(what); }

const Json& field_of(const Json& j, const char* name)
{
  if (!j.is_object() || !j.contains(name))
    fail(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int int_of(const Json& j, const char* what)
{
  if (!j.is_number_integer())
    fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

Json read_json_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    fail("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(path + ": " + e.what());
  }
}

Json levi_to_json(const Levi& m)
{
  Json out = Json::array();
  for (const auto& b : m.blocks()) {
    Json block = Json::array();
    for (int i : b)
      block.push_back(i + 1);
    out.push_back(block);
  }
  return out;
}

Levi levi_from_json(const Json& j, int n)
{
  if (!j.is_array())
    fail("levi must be an array of index arrays");
  std::vector<Block> blocks;
  std::set<int> seen;
  for (const auto& b : j) {
    if (!b.is_array() || b.empty())
      fail("levi blocks must be nonempty arrays");
    Block block;
    for (const auto& i : b) {
      int k = int_of(i, "levi index");
      if (k < 1 || k > n || !seen.insert(k).second)
        fail("levi indices must partition 1.." + std::to_string(n));
      block.push_back(k - 1);
    }
    blocks.push_back(block);
  }
  if (static_cast<int>(seen.size()) != n)
    fail("levi indices must partition 1.." + std::to_string(n));
  try {
    return Levi(n, blocks);
  } catch (const std::exception& e) {
    fail(e.what());
  }
}

Json vec_to_json(const Vec& v)
{
  Json out = Json::array();
  for (const auto& s : to_strings(v))
    out.push_back(s);
  return out;
}

Vec vec_from_json(const Json& j, int n)
{
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    fail("vectors must be arrays of " + std::to_string(n) + " rational strings");
  std::vector<std::string> s;
  for (const auto& x : j) {
    if (!x.is_string())
      fail("vector entries must be strings \"p/q\"");
    s.push_back(x.get<std::string>());
  }
  try {
    return to_ambient(parse_vec(s));
  } catch (const std::exception& e) {
    fail(std::string("bad rational: ") + e.what());
  }
}

FamilyInput family_from_json(const Json& j)
{
  int n = int_of(field_of(field_of(j, "group"), "n"), "group.n");
  if (n < 2 || n > 6)
    fail("group.n must lie in 2..6");
  Levi m = levi_from_json(field_of(j, "levi"), n);
  const Json& pts = field_of(j, "points");
  if (!pts.is_object())
    fail("points must be an object keyed by parabolic order keys");
  std::map<Parabolic, Vec> points;
  for (const auto& [key, value] : pts.items()) {
    Parabolic p;
    try {
      p = Parabolic::from_key(key, n);
    } catch (const std::exception& e) {
      fail("bad parabolic key \"" + key + "\": " + e.what());
    }
    points[p] = vec_from_json(value, n);
  }
  std::optional<Vec> xi;
  if (j.contains("xi"))
    xi = vec_from_json(j.at("xi"), n);
  try {
    PositiveOrthogonalFamily f(make_group(n), m, points);
    validate_family(f);
    return {f, xi};
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

Json family_to_json(const PositiveOrthogonalFamily& f)
{
  Json pts = Json::object();
  for (const auto& [p, y] : f.points())
    pts[p.key()] = vec_to_json(y);
  return Json{{"group", {{"n", f.group().n}}}, {"levi", levi_to_json(f.levi())}, {"points", pts}};
}

InstanceInput instance_from_json(const Json& j)
{
  int q = int_of(field_of(j, "q"), "q");
  const Json& dj = field_of(j, "D");
  if (!dj.is_array())
    fail("D must be an array of [place, multiplicity] pairs");
  std::vector<std::pair<std::string, int>> D;
  for (const auto& t : dj) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_string())
      fail("D entries must be [\"polynomial\", multiplicity]");
    D.emplace_back(t[0].get<std::string>(), int_of(t[1], "multiplicity"));
  }
  bool split = j.contains("lambda");
  if (split == j.contains("det"))
    fail("instance needs exactly one of \"lambda\" and \"det\"");
  InstanceInput out;
  try {
    if (split) {
      if (!j.at("lambda").is_string())
        fail("lambda must be a string");
      out.datum = build_char(q, D, j.at("lambda").get<std::string>());
    } else {
      out.datum = build_elliptic(q, D, int_of(j.at("det"), "det"));
    }
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  if (j.contains("xi"))
    out.xi = vec_from_json(j.at("xi"), 2);
  return out;
}

Json instance_to_json(const CharDatum& c, const std::optional<Vec>& xi)
{
  Json D = Json::array();
  for (const auto& t : c.D)
    D.push_back(Json::array({t.place.poly.to_string("t"), t.mult}));
  Json out{{"q", c.q}, {"D", D}};
  if (c.kind == CharKind::split)
    out["lambda"] = c.lambda.to_string("t");
  else
    out["det"] = c.det;
  if (xi)
    out["xi"] = vec_to_json(*xi);
  return out;
}

Json hn_to_json(const HNResult& r)
{
  return Json{{"rho", vec_to_json(r.rho)}, {"q", r.q.key()}, {"dist2", to_string(r.dist2)}};
}

}  // namespace hitchin
