#pragma once

// Serialization: the shared JSON matrix-space format (also the CLI input
// format), graph export (JSON and Graphviz DOT), tangent reports.
// Polynomial strings use graded-lex term order, so output is byte-stable.

#include <cctype>
#include <json.hpp>

#include "fano/spaces.hpp"
#include "fano/tangent.hpp"
#include "fano/version.hpp"

namespace fano {

using ordered_json = nlohmann::ordered_json;

inline ordered_json json_int(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

// --- polynomial parsing ----------------------------------------------------
//
//   poly   := [+-]? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := integer ('/' integer)? | ident ('^' integer)?

template <class F>
Poly<typename F::Elem> parse_poly(const F& field, const std::string& src,
                                  std::span<const std::string> vars) {
  using K = typename F::Elem;
  std::map<std::string, int> index;
  for (size_t i = 0; i < vars.size(); ++i) index[vars[i]] = static_cast<int>(i);
  int arity = static_cast<int>(vars.size());

  size_t pos = 0;
  auto skip_ws = [&] { while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos; };
  auto peek = [&]() -> char {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  };
  auto parse_int = [&]() -> Int {
    skip_ws();
    size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("parse_poly: expected integer in '" + src + "'");
    return Int(src.substr(start, pos - start));
  };
  auto parse_ident = [&]() -> std::string {
    skip_ws();
    size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
      ++pos;
    return src.substr(start, pos - start);
  };

  Poly<K> out(arity);
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= src.size()) {
      if (first) break;  // empty string = 0
      throw std::invalid_argument("parse_poly: trailing sign in '" + src + "'");
    }
    int sign = 1;
    char c = peek();
    if (c == '+' || c == '-') {
      if (c == '-') sign = -1;
      ++pos;
    } else if (!first) {
      throw std::invalid_argument("parse_poly: expected '+' or '-' in '" + src + "'");
    }
    first = false;

    K coeff = sign < 0 ? -field.one() : field.one();
    Expo e(arity, 0);
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      char f = peek();
      if (std::isdigit(static_cast<unsigned char>(f))) {
        Int num = parse_int();
        K val = field.of(num);
        if (peek() == '/') {
          ++pos;
          val = val / field.of(parse_int());
        }
        coeff = coeff * val;
      } else if (std::isalpha(static_cast<unsigned char>(f)) || f == '_') {
        std::string name = parse_ident();
        auto it = index.find(name);
        if (it == index.end())
          throw std::invalid_argument("parse_poly: unknown variable '" + name + "'");
        unsigned deg = 1;
        if (peek() == '^') {
          ++pos;
          deg = static_cast<unsigned>(parse_int().get_ui());
        }
        e[it->second] = static_cast<uint8_t>(e[it->second] + deg);
      } else {
        throw std::invalid_argument("parse_poly: unexpected character in '" + src + "'");
      }
      if (peek() == '*') {
        ++pos;
        expect_factor = true;
      } else {
        expect_factor = false;
      }
    }
    out.add_term(e, coeff);
    if (peek() == '\0') break;
  }
  return out;
}

// --- matrix spaces -----------------------------------------------------------

template <class K>
ordered_json space_to_json(const LinMatrixSpace<K>& sp) {
  ordered_json j;
  j["rows"] = sp.rows;
  j["cols"] = sp.cols;
  j["symmetry"] = symmetry_name(sp.sym);
  j["vars"] = sp.vars;
  ordered_json rows = ordered_json::array();
  for (long i = 0; i < sp.rows; ++i) {
    ordered_json row = ordered_json::array();
    for (long jj = 0; jj < sp.cols; ++jj) row.push_back(sp.entries(i, jj).str(sp.vars));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

template <class F>
LinMatrixSpace<typename F::Elem> space_from_json(const F& field, const ordered_json& j) {
  using K = typename F::Elem;
  LinMatrixSpace<K> sp;
  sp.rows = j.at("rows").get<long>();
  sp.cols = j.at("cols").get<long>();
  std::string sym = j.value("symmetry", "none");
  sp.sym = sym == "symmetric"     ? Symmetry::symmetric
           : sym == "alternating" ? Symmetry::alternating
                                  : Symmetry::none;
  if (j.contains("vars")) {
    sp.vars = j.at("vars").get<std::vector<std::string>>();
  } else {
    // infer z<i> variables from the entry strings
    long zmax = -1;
    for (const auto& row : j.at("entries"))
      for (const auto& cell : row) {
        const std::string s = cell.get<std::string>();
        for (size_t i = 0; i + 1 < s.size(); ++i)
          if (s[i] == 'z' && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
            long v = std::stol(s.substr(i + 1));
            zmax = std::max(zmax, v);
          }
      }
    for (long v = 0; v <= zmax; ++v) sp.vars.push_back("z" + std::to_string(v));
  }
  sp.entries = poly_mat<K>(sp.rows, sp.cols, static_cast<int>(sp.vars.size()));
  const auto& rows = j.at("entries");
  if (static_cast<long>(rows.size()) != sp.rows)
    throw std::invalid_argument("space_from_json: row count mismatch");
  for (long i = 0; i < sp.rows; ++i) {
    if (static_cast<long>(rows[i].size()) != sp.cols)
      throw std::invalid_argument("space_from_json: column count mismatch");
    for (long c = 0; c < sp.cols; ++c)
      sp.entries(i, c) = parse_poly(field, rows[i][c].get<std::string>(), sp.vars);
  }
  sp.check();
  return sp;
}

// --- graphs ------------------------------------------------------------------

inline ordered_json graph_to_json(const Params& p, const FanoGraph& g) {
  ordered_json j;
  j["k"] = g.k;
  ordered_json verts = ordered_json::array();
  for (const auto& [s, label] : g.vertices)
    verts.push_back({{"s", s}, {"kappa", json_int(label)}});
  j["vertices"] = std::move(verts);
  ordered_json edges = ordered_json::array();
  for (const auto& [s, s2, label] : g.edges)
    edges.push_back({{"s", s}, {"s2", s2}, {"label", json_int(label)}});
  j["edges"] = std::move(edges);
  ordered_json comps = ordered_json::array();
  for (const auto& comp : connected_components(g)) comps.push_back(comp);
  j["components"] = std::move(comps);
  (void)p;
  return j;
}

inline std::string graph_to_dot(const Params& p, const FanoGraph& g) {
  std::ostringstream os;
  os << "graph fano_components {\n";
  os << "  label=\"" << variant_name(p.variant.tag);
  if (p.variant.tag == VariantTag::rectangular) os << " m=" << p.variant.m;
  os << " n=" << p.n << " r=" << p.r << " k=" << p.k << "\";\n";
  if (g.empty()) {
    os << "  // scheme empty\n";
  } else {
    for (const auto& [s, label] : g.vertices)
      os << "  " << s << " [label=\"s=" << s << "\\nkappa=" << label.get_str() << "\"];\n";
    for (const auto& [s, s2, label] : g.edges)
      os << "  " << s << " -- " << s2 << " [label=\"" << label.get_str() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

// --- tangent reports ----------------------------------------------------------

inline ordered_json tangent_report_to_json(const TangentReport& r) {
  ordered_json j;
  j["method"] = r.method;
  j["n"] = r.n;
  j["r"] = r.r;
  j["k"] = r.k;
  if (r.s >= 0) j["s"] = r.s;
  j["ambient_grassmannian_dim"] = json_int(r.ambient_grassmannian_dim);
  j["lift_unknowns"] = r.lift_unknowns;
  j["constraint_rows"] = r.constraint_rows;
  j["rank"] = r.rank;
  j["tangent_dim"] = json_int(r.tangent_dim);
  if (r.seed) j["seed"] = *r.seed;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

}  // namespace fano
