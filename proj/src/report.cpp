#include "covlift/report.hpp"

#include <sstream>
#include <thread>

#include "covlift/error.hpp"

namespace covlift {

OracleMode parse_oracle_mode(const std::string& text) {
  if (text == "off") return OracleMode::Off;
  if (text == "kernel") return OracleMode::Kernel;
  if (text == "liftsearch") return OracleMode::LiftSearch;
  if (text == "both") return OracleMode::Both;
  throw Error(ErrorCode::ParseError, "oracle mode must be off, kernel, liftsearch or both");
}

Json to_json(const ModMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string cycle_notation(const Graph& g, const Automorphism& alpha) {
  bool compact = true;
  for (const std::string& label : g.labels()) compact = compact && label.size() == 1;
  std::vector<bool> seen(g.vertex_count(), false);
  std::string out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (seen[v]) continue;
    out += '(';
    Vertex x = v;
    bool first = true;
    do {
      seen[x] = true;
      if (!first && !compact) out += ' ';
      out += g.label(x);
      first = false;
      x = alpha(x);
    } while (x != v);
    out += ')';
  }
  return out;
}

namespace {

Json one_based_cell(const ViolatedCell& c) {
  return Json{{"row", c.row + 1}, {"col", c.col + 1}, {"degree", c.degree_found}, {"required", c.degree_required}};
}

Json labels_of(const Graph& g, const Walk& w) {
  Json out = Json::array();
  for (Vertex v : w.vertices()) out.push_back(g.label(v));
  return out;
}

Json element_json(const Fixture& f, const GroupElement& x) {
  return Json{{"canonical", x.residues}, {"factors", f.group.to_factors(x)}};
}

Json fixture_echo(const Fixture& f) {
  const Graph& g = f.graph;
  Json doc;
  doc["graph"] = {{"vertices", g.vertex_count()},
                  {"edges", g.edge_count()},
                  {"cycle_rank", f.basis.rank()},
                  {"base", g.label(f.basis.base())}};
  Json canonical = Json::array();
  for (const PrimeComponent& c : f.group.spec().components()) {
    canonical.push_back({{"prime", c.prime}, {"exponents", c.exponents}});
  }
  doc["group"] = {{"factors", f.group.factor_orders()}, {"canonical", canonical}, {"order", f.group.spec().order()}};

  Json tree = Json::array();
  for (const Edge& e : f.basis.tree_edges()) tree.push_back(Json::array({g.label(e.u), g.label(e.v)}));
  Json cotree = Json::array();
  for (const Arc& a : f.basis.cotree_arcs()) cotree.push_back(Json::array({g.label(a.tail), g.label(a.head)}));
  Json cycles = Json::array();
  for (const Walk& w : f.basis.cycles()) cycles.push_back(labels_of(g, w));
  doc["basis"] = {{"tree", tree}, {"cotree_arcs", cotree}, {"cycles", cycles}};
  doc["gauge_reduced"] = f.gauge_reduced;

  Json theta = Json::array();
  for (const GroupElement& x : f.matrices.theta) theta.push_back(element_json(f, x));
  doc["theta"] = theta;

  Json primes = Json::array();
  for (std::size_t i = 0; i < f.matrices.per_prime.size(); ++i) {
    const PrimeVoltageMatrix& pm = f.matrices.per_prime[i];
    const NormalFormResult& nf = f.normal_forms[i];
    primes.push_back({{"prime", pm.ring.prime()},
                      {"exponent", pm.ring.exponent()},
                      {"modulus", pm.ring.modulus()},
                      {"B", to_json(pm.b)},
                      {"s", nf.exponents},
                      {"i0", nf.first_positive + 1},
                      {"pivot_count", nf.pivot_count},
                      {"Q", to_json(nf.q)},
                      {"Q_inv", to_json(nf.q_inv)},
                      {"T", to_json(nf.t)}});
  }
  doc["primes"] = primes;
  return doc;
}

}  // namespace

CheckOutcome run_check(const Fixture& f, const CheckOptions& options) {
  const std::vector<LiftReport> reports = lift_check_batch(f.basis, f.matrices, f.automorphisms, options.threads);
  const bool kernel = options.oracle == OracleMode::Kernel || options.oracle == OracleMode::Both;
  const bool search = options.oracle == OracleMode::LiftSearch || options.oracle == OracleMode::Both;

  CheckOutcome outcome;
  Json doc = fixture_echo(f);
  doc["oracle"] = kernel && search ? "both" : kernel ? "kernel" : search ? "liftsearch" : "off";
  Json autos = Json::array();
  Json lifting = Json::array();
  Json not_lifting = Json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const LiftReport& r = reports[i];
    const Automorphism& alpha = f.automorphisms[i].alpha;
    Json entry;
    entry["name"] = r.name;
    entry["cycles"] = cycle_notation(f.graph, alpha);
    entry["lifts"] = r.lifts;
    entry["S"] = to_json(r.s);
    Json verdicts = Json::array();
    for (const PrimeVerdict& v : r.verdicts) {
      Json pv{{"prime", v.prime}, {"s", v.s}, {"i0", v.first_positive + 1}, {"pass", v.pass}};
      pv["QSQ_inv"] = v.conjugated ? to_json(*v.conjugated) : Json::array();
      pv["witness"] = v.witness ? one_based_cell(*v.witness) : Json(nullptr);
      Json all = Json::array();
      for (const ViolatedCell& c : v.violations) all.push_back(one_based_cell(c));
      pv["violations"] = all;
      verdicts.push_back(std::move(pv));
    }
    entry["primes"] = verdicts;

    bool agree = true;
    if (kernel || search) {
      Json oracles = Json::object();
      if (kernel) {
        const bool k = kernel_oracle(f.matrices, r.s, options.budget);
        oracles["kernel"] = k;
        agree = agree && k == r.lifts;
      }
      if (search) {
        const LiftSearchResult ls = lift_search_oracle(f.graph, f.basis, f.input_voltages, alpha, options.budget);
        oracles["lift_search"] = ls.lifts;
        if (ls.certificate) {
          oracles["lift_offset"] = f.group.to_factors(f.group.spec().element_at(ls.certificate->offset_index));
        }
        agree = agree && ls.lifts == r.lifts;
      }
      oracles["agree"] = agree;
      entry["oracles"] = oracles;
    }
    if (!agree) outcome.disagreements.push_back(r.name);
    (r.lifts ? lifting : not_lifting).push_back(r.name);
    autos.push_back(std::move(entry));
  }
  doc["automorphisms"] = autos;
  doc["summary"] = {{"lifting", lifting}, {"not_lifting", not_lifting}, {"oracle_disagreements", outcome.disagreements}};
  outcome.report = std::move(doc);
  return outcome;
}

Json normal_form_report(const ModMatrix& x) {
  const NormalFormResult nf = normal_form(x);
  return Json{{"prime", x.ring().prime()},
              {"exponent", x.ring().exponent()},
              {"modulus", x.ring().modulus()},
              {"X", to_json(x)},
              {"s", nf.exponents},
              {"i0", nf.first_positive + 1},
              {"pivot_count", nf.pivot_count},
              {"Q", to_json(nf.q)},
              {"Q_inv", to_json(nf.q_inv)},
              {"T", to_json(nf.t)},
              {"QXT", to_json(mat_mul(mat_mul(nf.q, x), nf.t))},
              {"verified", is_normal_form_of(nf, x) && mat_mul(nf.q, nf.q_inv) == ModMatrix::identity(x.ring(), x.rows())}};
}

// --- Text rendering ---------------------------------------------------------

namespace {

std::string join(const Json& values, const char* sep = ",") {
  std::ostringstream out;
  bool first = true;
  for (const Json& v : values) {
    out << (first ? "" : sep) << (v.is_string() ? v.get<std::string>() : v.dump());
    first = false;
  }
  return out.str();
}

void print_matrix(std::ostringstream& out, const std::string& title, const Json& rows, const std::string& indent) {
  out << indent << title << ":\n";
  std::size_t width = 1;
  for (const Json& row : rows)
    for (const Json& x : row) width = std::max(width, x.dump().size());
  for (const Json& row : rows) {
    out << indent << " ";
    for (const Json& x : row) {
      const std::string s = x.dump();
      out << ' ' << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
}

std::string cell_text(const Json& c) {
  return "(" + c["row"].dump() + "," + c["col"].dump() + ") degree " + c["degree"].dump() + " < " +
         c["required"].dump();
}

}  // namespace

std::string render_check_text(const Json& r) {
  std::ostringstream out;
  const Json& g = r["graph"];
  out << "graph: " << g["vertices"] << " vertices, " << g["edges"] << " edges, cycle rank t = " << g["cycle_rank"]
      << ", base " << g["base"].get<std::string>() << '\n';
  out << "group: factors (" << join(r["group"]["factors"]) << "), order " << r["group"]["order"] << ", canonical";
  for (const Json& c : r["group"]["canonical"]) out << " p=" << c["prime"] << " k=(" << join(c["exponents"]) << ")";
  out << '\n';
  out << "tree:";
  for (const Json& e : r["basis"]["tree"]) out << " {" << join(e) << "}";
  out << '\n';
  const Json& cotree = r["basis"]["cotree_arcs"];
  for (std::size_t i = 0; i < cotree.size(); ++i) {
    const Json& theta = r["theta"][i];
    out << "h" << i + 1 << " = (" << join(cotree[i]) << ")  L" << i + 1 << " = " << join(r["basis"]["cycles"][i], " ")
        << "  theta" << i + 1 << " = (" << join(theta["canonical"]) << ") factors (" << join(theta["factors"])
        << ")\n";
  }
  out << "gauge reduced: " << (r["gauge_reduced"].get<bool>() ? "yes" : "no") << '\n';
  for (const Json& p : r["primes"]) {
    out << "prime " << p["prime"] << " (mod " << p["modulus"] << "): s = (" << join(p["s"]) << "), i0 = " << p["i0"]
        << ", pivots = " << p["pivot_count"] << '\n';
    print_matrix(out, "B", p["B"], "  ");
    print_matrix(out, "Q", p["Q"], "  ");
    print_matrix(out, "Q^-1", p["Q_inv"], "  ");
    print_matrix(out, "T", p["T"], "  ");
  }
  out << "oracle: " << r["oracle"].get<std::string>() << '\n';
  for (const Json& a : r["automorphisms"]) {
    out << '\n'
        << a["name"].get<std::string>() << " = " << a["cycles"].get<std::string>() << ": "
        << (a["lifts"].get<bool>() ? "LIFTS" : "DOES NOT LIFT") << '\n';
    print_matrix(out, "S", a["S"], "  ");
    for (const Json& p : a["primes"]) {
      out << "  prime " << p["prime"] << ": " << (p["pass"].get<bool>() ? "pass" : "fail") << ", s = (" << join(p["s"])
          << "), i0 = " << p["i0"] << '\n';
      print_matrix(out, "Q S Q^-1", p["QSQ_inv"], "    ");
      if (!p["witness"].is_null()) out << "    witness " << cell_text(p["witness"]) << '\n';
      if (p["violations"].size() > 1) {
        out << "    violations:";
        for (const Json& c : p["violations"]) out << " " << cell_text(c) << ";";
        out << '\n';
      }
    }
    if (a.contains("oracles")) {
      const Json& o = a["oracles"];
      out << "  oracles:";
      if (o.contains("kernel")) out << " kernel=" << (o["kernel"].get<bool>() ? "lifts" : "no");
      if (o.contains("lift_search")) out << " lift_search=" << (o["lift_search"].get<bool>() ? "lifts" : "no");
      if (o.contains("lift_offset")) out << " offset=(" << join(o["lift_offset"]) << ")";
      out << (o["agree"].get<bool>() ? " agree" : " DISAGREE") << '\n';
    }
  }
  const Json& s = r["summary"];
  out << "\nsummary: lifting [" << join(s["lifting"], " ") << "], not lifting [" << join(s["not_lifting"], " ")
      << "]";
  if (!s["oracle_disagreements"].empty()) out << ", ORACLE DISAGREEMENTS [" << join(s["oracle_disagreements"], " ") << "]";
  out << '\n';
  return out.str();
}

std::string render_normal_form_text(const Json& r) {
  std::ostringstream out;
  out << "ring: Z/" << r["modulus"] << " (p = " << r["prime"] << ", k = " << r["exponent"] << ")\n";
  print_matrix(out, "X", r["X"], "");
  out << "s = (" << join(r["s"]) << "), i0 = " << r["i0"] << ", pivots = " << r["pivot_count"] << '\n';
  print_matrix(out, "Q", r["Q"], "");
  print_matrix(out, "Q^-1", r["Q_inv"], "");
  print_matrix(out, "T", r["T"], "");
  print_matrix(out, "Q X T", r["QXT"], "");
  out << "verified: " << (r["verified"].get<bool>() ? "yes" : "NO") << '\n';
  return out.str();
}

}  // namespace covlift
