#include "covlift/instance.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "covlift/error.hpp"

namespace covlift {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

std::string read_label(const Json& node, const std::string& where) {
  if (node.is_string()) return node.get<std::string>();
  if (node.is_number_integer()) return std::to_string(node.get<std::int64_t>());
  fail(where, "expected a vertex label (string)");
}

LabelPair read_pair(const Json& node, const std::string& where) {
  if (!node.is_array() || node.size() != 2) fail(where, "expected a pair [u, v]");
  return {read_label(node[0], where + "[0]"), read_label(node[1], where + "[1]")};
}

std::vector<LabelPair> read_pairs(const Json& node, const std::string& where) {
  if (!node.is_array()) fail(where, "expected an array of pairs");
  std::vector<LabelPair> out;
  for (std::size_t i = 0; i < node.size(); ++i) out.push_back(read_pair(node[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::int64_t> read_integers(const Json& node, const std::string& where) {
  if (!node.is_array()) fail(where, "expected an array of integers");
  std::vector<std::int64_t> out;
  for (const Json& x : node) {
    if (!x.is_number_integer()) fail(where, "expected an integer");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

/// Splits "u>v" at the unique '>' that leaves two known labels.
LabelPair split_arc_key(const std::string& key, const std::vector<std::string>& vertices, const std::string& where) {
  std::optional<LabelPair> found;
  for (std::size_t pos = key.find('>'); pos != std::string::npos; pos = key.find('>', pos + 1)) {
    LabelPair candidate{key.substr(0, pos), key.substr(pos + 1)};
    const bool left = std::find(vertices.begin(), vertices.end(), candidate.first) != vertices.end();
    const bool right = std::find(vertices.begin(), vertices.end(), candidate.second) != vertices.end();
    if (!left || !right) continue;
    if (found) fail(where, "ambiguous arc key '" + key + "'");
    found = candidate;
  }
  if (!found) fail(where, "arc key '" + key + "' is not of the form u>v with known labels");
  return *found;
}

Json pairs_to_json(const std::vector<LabelPair>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back(Json::array({a, b}));
  return out;
}

}  // namespace

std::vector<LabelPair> parse_cycle_notation(const std::string& text) {
  std::vector<LabelPair> mapping;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("cycle notation", "expected '(' in \"" + text + "\"");
    const std::size_t close = text.find(')', pos);
    if (close == std::string::npos) fail("cycle notation", "unbalanced '(' in \"" + text + "\"");
    const std::string body = text.substr(pos + 1, close - pos - 1);
    std::vector<std::string> labels;
    if (body.find_first_of(" \t,") != std::string::npos) {
      std::string token;
      for (char c : body) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
          if (!token.empty()) labels.push_back(std::move(token));
          token.clear();
        } else {
          token.push_back(c);
        }
      }
      if (!token.empty()) labels.push_back(std::move(token));
    } else {
      for (char c : body) labels.emplace_back(1, c);
    }
    for (std::size_t i = 0; i < labels.size(); ++i) mapping.emplace_back(labels[i], labels[(i + 1) % labels.size()]);
    pos = close + 1;
    skip_space();
  }
  return mapping;
}

Instance parse_instance(const Json& doc) {
  if (!doc.is_object()) fail("instance", "expected a JSON object");
  Instance in;
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) fail("vertices", "missing or not an array");
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    in.vertices.push_back(read_label(doc["vertices"][i], "vertices[" + std::to_string(i) + "]"));
  }
  if (!doc.contains("edges")) fail("edges", "missing");
  in.edges = read_pairs(doc["edges"], "edges");
  if (doc.contains("base")) {
    in.base = read_label(doc["base"], "base");
  } else if (!in.vertices.empty()) {
    in.base = in.vertices.front();
  }
  if (doc.contains("tree")) in.tree = read_pairs(doc["tree"], "tree");
  if (doc.contains("cotree_arcs")) in.cotree_arcs = read_pairs(doc["cotree_arcs"], "cotree_arcs");
  if (doc.contains("group")) in.group = read_integers(doc["group"], "group");

  if (doc.contains("voltages")) {
    const Json& v = doc["voltages"];
    if (!v.is_object()) fail("voltages", "expected an object of \"u>v\": [residues]");
    for (const auto& [key, value] : v.items()) {
      const std::string where = "voltages[\"" + key + "\"]";
      VoltageEntry entry{split_arc_key(key, in.vertices, where), {}};
      if (value.is_number_integer()) {
        entry.residues = {value.get<std::int64_t>()};
      } else {
        entry.residues = read_integers(value, where);
      }
      if (entry.residues.size() != in.group.size()) fail(where, "needs one residue per cyclic factor of the group");
      in.voltages.push_back(std::move(entry));
    }
  }

  if (doc.contains("automorphisms")) {
    const Json& a = doc["automorphisms"];
    if (!a.is_object()) fail("automorphisms", "expected an object of name: cycles | mapping");
    for (const auto& [name, value] : a.items()) {
      const std::string where = "automorphisms[\"" + name + "\"]";
      if (value.is_string()) {
        in.automorphisms.emplace_back(name, value.get<std::string>());
      } else if (value.is_object()) {
        std::vector<LabelPair> mapping;
        for (const auto& [from, to] : value.items()) mapping.emplace_back(from, read_label(to, where));
        in.automorphisms.emplace_back(name, std::move(mapping));
      } else {
        fail(where, "expected a cycle-notation string or a mapping object");
      }
    }
  }
  return in;
}

Instance parse_instance_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail("instance", e.what());
  }
  return parse_instance(doc);
}

Instance load_instance(const std::string& path) {
  std::ifstream file(path);
  if (!file) fail(path, "cannot open file");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_instance_text(buffer.str());
}

Json to_json(const Instance& in) {
  Json doc;
  doc["vertices"] = in.vertices;
  doc["edges"] = pairs_to_json(in.edges);
  doc["base"] = in.base;
  if (in.tree) doc["tree"] = pairs_to_json(*in.tree);
  if (in.cotree_arcs) doc["cotree_arcs"] = pairs_to_json(*in.cotree_arcs);
  doc["group"] = in.group;
  Json voltages = Json::object();
  for (const VoltageEntry& v : in.voltages) voltages[v.arc.first + ">" + v.arc.second] = v.residues;
  doc["voltages"] = voltages;
  Json autos = Json::object();
  for (const auto& [name, spec] : in.automorphisms) {
    if (const auto* cycles = std::get_if<std::string>(&spec)) {
      autos[name] = *cycles;
    } else {
      Json mapping = Json::object();
      for (const auto& [from, to] : std::get<std::vector<LabelPair>>(spec)) mapping[from] = to;
      autos[name] = mapping;
    }
  }
  doc["automorphisms"] = autos;
  return doc;
}

Fixture build_fixture(const Instance& in) {
  Graph graph = validate_graph(in.vertices, in.edges);
  const auto base = graph.find(in.base);
  if (!base) throw Error(ErrorCode::BaseNotInGraph, "base vertex '" + in.base + "' is not in the graph");

  auto to_arcs = [&](const std::vector<LabelPair>& pairs) {
    std::vector<Arc> arcs;
    for (const auto& [a, b] : pairs) arcs.push_back({graph.vertex(a), graph.vertex(b)});
    return arcs;
  };
  TreeOptions options;
  if (in.tree) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const Arc& a : to_arcs(*in.tree)) edges.emplace_back(a.tail, a.head);
    options.tree_edges = std::move(edges);
  }
  if (in.cotree_arcs) options.cotree_arcs = to_arcs(*in.cotree_arcs);
  CycleBasis basis = build_spanning_tree(graph, *base, options);

  GroupPresentation group = parse_group_spec(in.group);
  std::vector<std::pair<Arc, GroupElement>> raw;
  for (const VoltageEntry& v : in.voltages) {
    raw.emplace_back(Arc{graph.vertex(v.arc.first), graph.vertex(v.arc.second)}, group.from_factors(v.residues));
  }
  VoltageAssignment input = validate_voltage(graph, basis, group.spec(), raw);
  const bool reduce = !input.t_reduced();
  VoltageAssignment voltages = reduce ? gauge_reduce(graph, basis, input) : input;
  VoltageMatrices matrices = build_voltage_matrices(basis, voltages);
  std::vector<NormalFormResult> forms = normalize_voltage_matrices(matrices);

  std::vector<NamedAutomorphism> autos;
  for (const auto& [name, spec] : in.automorphisms) {
    const std::vector<LabelPair> mapping = std::holds_alternative<std::string>(spec)
                                               ? parse_cycle_notation(std::get<std::string>(spec))
                                               : std::get<std::vector<LabelPair>>(spec);
    try {
      autos.push_back({name, check_automorphism(graph, mapping)});
    } catch (const Error& e) {
      throw Error(e.code(), "automorphism '" + name + "': " + e.what());
    }
  }

  return Fixture{std::move(graph),    std::move(basis),    std::move(group), std::move(input),
                 std::move(voltages), reduce,              std::move(matrices),
                 std::move(forms),    std::move(autos)};
}

}  // namespace covlift
