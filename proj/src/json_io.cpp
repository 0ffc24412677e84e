#include "frobspan/json_io.hpp"

#include <nlohmann/json.hpp>

namespace frobspan {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::map<std::string, std::string> string_map(const json& j, const char* name) {
  if (!j.is_object()) throw ParseError(std::string(name) + ": expected an object of labels");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw ParseError(std::string(name) + ": image of \"" + k +
                                         "\" must be a string");
    out[k] = v.get<std::string>();
  }
  return out;
}

SetMap read_map(const json& j, const char* name, const FiniteSet& dom, const FiniteSet& cod) {
  try {
    return SetMap(dom, cod, string_map(j, name));
  } catch (const ParseError& e) {
    throw ParseError(std::string(name) + ": " + e.what());
  }
}

}  // namespace

FiniteSet finite_set_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("finite set: expected an array of labels");
  std::vector<std::string> labels;
  for (const auto& v : j) {
    if (!v.is_string()) throw ParseError("finite set: labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  return FiniteSet(std::move(labels));
}

SetMap set_map_from_json(const json& j, const FiniteSet& dom, const FiniteSet& cod) {
  return read_map(j, "map", dom, cod);
}

Span span_from_json(const json& j) {
  FiniteSet src = finite_set_from_json(field(j, "src"));
  FiniteSet dst = finite_set_from_json(field(j, "dst"));
  FiniteSet apex = finite_set_from_json(field(j, "apex"));
  return Span(src, dst, apex, read_map(field(j, "left"), "left", apex, src),
              read_map(field(j, "right"), "right", apex, dst));
}

Relation relation_from_json(const json& j) {
  FiniteSet src = finite_set_from_json(field(j, "src"));
  FiniteSet dst = finite_set_from_json(field(j, "dst"));
  const json& pairs = field(j, "pairs");
  if (!pairs.is_array()) throw ParseError("relation: \"pairs\" must be an array");
  std::vector<std::pair<std::string, std::string>> label_pairs;
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw ParseError("relation: each pair must be a [src, dst] label pair");
    label_pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return Relation(std::move(src), std::move(dst), label_pairs);
}

RelationWord relation_word_from_json(const json& j) {
  const json& objects = field(j, "objects");
  const json& letters = field(j, "letters");
  if (!objects.is_array() || !letters.is_array())
    throw ParseError("relation word: \"objects\" and \"letters\" must be arrays");
  std::vector<FiniteSet> objs;
  for (const auto& o : objects) objs.push_back(finite_set_from_json(o));
  std::vector<Relation> lets;
  for (const auto& l : letters) lets.push_back(relation_from_json(l));
  return RelationWord(std::move(objs), std::move(lets));
}

TruncatedSS2 tss2_from_json(const json& j) {
  FiniteSet X0 = finite_set_from_json(field(j, "X0"));
  FiniteSet X1 = finite_set_from_json(field(j, "X1"));
  FiniteSet X2 = finite_set_from_json(field(j, "X2"));
  const json& d1 = field(j, "d1");
  const json& d2 = field(j, "d2");
  const json& s1 = field(j, "s1");
  return TruncatedSS2(X0, X1, X2, read_map(field(d1, "0"), "d1.0", X1, X0),
                      read_map(field(d1, "1"), "d1.1", X1, X0),
                      read_map(field(d2, "0"), "d2.0", X2, X1),
                      read_map(field(d2, "1"), "d2.1", X2, X1),
                      read_map(field(d2, "2"), "d2.2", X2, X1),
                      read_map(field(j, "s0"), "s0", X0, X1),
                      read_map(field(s1, "0"), "s1.0", X1, X2),
                      read_map(field(s1, "1"), "s1.1", X1, X2));
}

FrobeniusDatum frobenius_from_json(const json& j) {
  TruncatedSS2 t = tss2_from_json(j);
  SetMap alpha = read_map(field(j, "alpha_hat"), "alpha_hat", t.X1, t.X1);
  return FrobeniusDatum(std::move(t), std::move(alpha));
}

Group group_from_json(const json& j) {
  FiniteSet elements = finite_set_from_json(field(j, "elements"));
  const json& identity = field(j, "identity");
  if (!identity.is_string()) throw ParseError("group: \"identity\" must be a label");
  const json& table = field(j, "table");
  if (!table.is_object()) throw ParseError("group: \"table\" must be an object");
  std::map<std::string, std::map<std::string, std::string>> rows;
  for (const auto& [a, row] : table.items()) rows[a] = string_map(row, "table row");
  return Group(std::move(elements), identity.get<std::string>(), rows);
}

Groupoid groupoid_from_json(const json& j) {
  FiniteSet objects = finite_set_from_json(field(j, "objects"));
  FiniteSet morphisms = finite_set_from_json(field(j, "morphisms"));
  SetMap src = read_map(field(j, "src"), "src", morphisms, objects);
  SetMap tgt = read_map(field(j, "tgt"), "tgt", morphisms, objects);
  const json& comp = field(j, "comp");
  if (!comp.is_object()) throw ParseError("groupoid: \"comp\" must be an object");
  std::map<std::string, std::map<std::string, std::string>> rows;
  for (const auto& [f, row] : comp.items()) rows[f] = string_map(row, "comp row");
  return Groupoid(std::move(objects), std::move(morphisms), std::move(src), std::move(tgt), rows);
}

GeneratorWord generator_word_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    using Kind = GeneratorWord::Kind;
    if (s == "unit") return GeneratorWord::leaf(Kind::unit);
    if (s == "counit") return GeneratorWord::leaf(Kind::counit);
    if (s == "mult") return GeneratorWord::leaf(Kind::mult);
    if (s == "comult") return GeneratorWord::leaf(Kind::comult);
    if (s == "id") return GeneratorWord::leaf(Kind::id);
    if (s == "twist") return GeneratorWord::leaf(Kind::twist);
    throw ParseError("generator word: unknown leaf \"" + s + "\"");
  }
  if (!j.is_array() || j.size() < 2 || !j[0].is_string())
    throw ParseError("generator word: expected [\"compose\"|\"tensor\", parts...]");
  const std::string head = j[0].get<std::string>();
  std::vector<GeneratorWord> children;
  for (std::size_t i = 1; i < j.size(); ++i) children.push_back(generator_word_from_json(j[i]));
  if (head == "compose") return GeneratorWord::compose_of(std::move(children));
  if (head == "tensor") return GeneratorWord::tensor_of(std::move(children));
  throw ParseError("generator word: unknown node \"" + head + "\"");
}

json finite_set_to_json(const FiniteSet& s) { return json(s.labels()); }

json set_map_to_json(const SetMap& m) {
  json out = json::object();
  for (std::size_t i = 0; i < m.dom().size(); ++i)
    out[m.dom().label(i)] = m.cod().label(m.apply_index(i));
  return out;
}

json span_to_json(const Span& s) {
  return json{{"src", finite_set_to_json(s.src)},
              {"dst", finite_set_to_json(s.dst)},
              {"apex", finite_set_to_json(s.apex)},
              {"left", set_map_to_json(s.left)},
              {"right", set_map_to_json(s.right)}};
}

json relation_to_json(const Relation& r) {
  json pairs = json::array();
  for (const auto& [x, y] : r.label_pairs()) pairs.push_back(json::array({x, y}));
  return json{{"src", finite_set_to_json(r.src)},
              {"dst", finite_set_to_json(r.dst)},
              {"pairs", pairs}};
}

json relation_word_to_json(const RelationWord& w) {
  json objects = json::array();
  for (const auto& o : w.objects) objects.push_back(finite_set_to_json(o));
  json letters = json::array();
  for (const auto& l : w.letters) letters.push_back(relation_to_json(l));
  return json{{"objects", objects}, {"letters", letters}};
}

json tss2_to_json(const TruncatedSS2& t) {
  return json{{"X0", finite_set_to_json(t.X0)},
              {"X1", finite_set_to_json(t.X1)},
              {"X2", finite_set_to_json(t.X2)},
              {"d1", json{{"0", set_map_to_json(t.d1_0)}, {"1", set_map_to_json(t.d1_1)}}},
              {"d2", json{{"0", set_map_to_json(t.d2_0)},
                          {"1", set_map_to_json(t.d2_1)},
                          {"2", set_map_to_json(t.d2_2)}}},
              {"s0", set_map_to_json(t.s0)},
              {"s1", json{{"0", set_map_to_json(t.s1_0)}, {"1", set_map_to_json(t.s1_1)}}}};
}

json frobenius_to_json(const FrobeniusDatum& f) {
  json out = tss2_to_json(f.base);
  out["alpha_hat"] = set_map_to_json(f.alpha_hat);
  return out;
}

json matrix_to_json(const MultiplicityMatrix& m) {
  json counts = json::array();
  for (std::size_t i = 0; i < m.src().size(); ++i)
    for (std::size_t j = 0; j < m.dst().size(); ++j) counts.push_back(m.at(i, j).str());
  return json{{"src", finite_set_to_json(m.src())},
              {"dst", finite_set_to_json(m.dst())},
              {"counts", counts}};
}

json algebra_to_json(const FrobeniusAlgebraPresentation& p) {
  const std::size_t n = p.basis.size();
  json mult = json::object();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      json row = json::object();
      for (std::size_t z = 0; z < n; ++z)
        if (p.c(x, y, z) != 0)
          row[p.basis.label(z)] = p.c(x, y, z).convert_to<std::uint64_t>();
      if (!row.empty()) mult[p.basis.label(x) + "|" + p.basis.label(y)] = row;
    }
  json unit = json::array(), counit = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    unit.push_back(p.unit_vec[i].convert_to<std::uint64_t>());
    counit.push_back(p.counit_vec[i].convert_to<std::uint64_t>());
  }
  return json{{"basis", finite_set_to_json(p.basis)},
              {"mult", mult},
              {"unit", unit},
              {"counit", counit}};
}

}  // namespace frobspan
