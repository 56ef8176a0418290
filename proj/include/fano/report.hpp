#pragma once

// The aggregated per-instance report: emptiness, kappa table, component
// graph, irreducibility, per-s dimension and tangent data, and the (clearly
// labelled) smoothness conjecture.  Every number is recomputed from the
// closed forms on each call.

#include "fano/json_io.hpp"

namespace fano {

inline ordered_json build_report(const Params& p) {
  p.validate();
  ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  ordered_json params;
  params["variant"] = variant_name(p.variant.tag);
  if (p.variant.tag == VariantTag::rectangular) params["m"] = p.variant.m;
  params["n"] = p.n;
  params["r"] = p.r;
  params["k"] = p.k;
  j["params"] = std::move(params);
  j["ambient_projective_dim"] = json_int(p.ambient_dim());
  j["s_max"] = s_max(p);
  if (p.symmetric()) j["variety_dim"] = json_int(variety_dim(p));

  bool nonempty = is_nonempty(p);
  j["empty"] = !nonempty;

  ordered_json ktab = ordered_json::array();
  for (long s = 0; s <= s_max(p); ++s)
    ktab.push_back({{"s", s}, {"kappa", json_int(kappa(p, s))}});
  j["kappa"] = std::move(ktab);

  auto g = build_graph(p);
  j["graph"] = graph_to_json(p, g);
  if (nonempty) {
    auto comps = connected_components(g);
    j["component_count"] = comps.size();
    j["connected"] = comps.size() == 1;
    j["cycle_disconnected"] = cycle_disconnected(p);
  }

  if (p.symmetric() && nonempty) {
    j["irreducible"] = is_irreducible(p);
    if (p.r == p.n) j["expected_dim_hypersurface"] = json_int(expected_dim_hypersurface(p));
    ordered_json per_s = ordered_json::array();
    for (long s = 0; s <= s_max(p); ++s) {
      if (Int(p.k) > kappa(p, s)) continue;
      Int gap = nonreduced_gap(p, s);
      ordered_json row;
      row["s"] = s;
      row["kappa"] = json_int(kappa(p, s));
      row["dim_component"] = json_int(dim_component(p, s));
      row["tangent_general"] = json_int(tangent_formula_general(p, s));
      row["nonreduced_gap"] = json_int(gap);
      row["generically_reduced"] = gap == 0;
      per_s.push_back(std::move(row));
    }
    j["components_per_s"] = std::move(per_s);
    if (p.r == p.n && p.r % 2 == 1 && p.k >= 1 && Int(p.k) <= kappa(p, (p.r - 1) / 2))
      j["tangent_middle"] = json_int(tangent_formula_middle(p));
  }
  if (p.symmetric())
    j["smoothness_conjecture"] = {{"value", smoothness_conjecture(p)},
                                  {"status", "CONJECTURE: predicate only, not a theorem"}};
  return j;
}

inline std::string render_report_text(const ordered_json& j) {
  std::ostringstream os;
  const auto& p = j.at("params");
  os << j.at("tool").get<std::string>() << " " << j.at("version").get<std::string>()
     << " report\n";
  os << "  variant: " << p.at("variant").get<std::string>();
  if (p.contains("m")) os << "  m=" << p.at("m");
  os << "  n=" << p.at("n") << "  r=" << p.at("r") << "  k=" << p.at("k") << "\n";
  os << "  ambient projective dimension: " << j.at("ambient_projective_dim") << "\n";
  if (j.contains("variety_dim")) os << "  variety dimension: " << j.at("variety_dim") << "\n";
  os << "  kappa:";
  for (const auto& row : j.at("kappa"))
    os << "  kappa(" << row.at("s") << ")=" << row.at("kappa");
  os << "\n";
  if (j.at("empty").get<bool>()) {
    os << "  scheme empty (k exceeds max{kappa(0), kappa(s_max)})\n";
    return os.str();
  }
  os << "  components: " << j.at("component_count") << "  ("
     << (j.at("connected").get<bool>() ? "connected" : "disconnected") << ")\n";
  if (j.contains("irreducible"))
    os << "  irreducible: " << (j.at("irreducible").get<bool>() ? "yes" : "no") << "\n";
  if (j.contains("expected_dim_hypersurface"))
    os << "  expected dimension (hypersurface case): " << j.at("expected_dim_hypersurface")
       << "\n";
  if (j.contains("components_per_s")) {
    for (const auto& row : j.at("components_per_s")) {
      os << "  s=" << row.at("s") << ": dim C_s^k = " << row.at("dim_component")
         << ", generic tangent = " << row.at("tangent_general")
         << ", gap = " << row.at("nonreduced_gap")
         << (row.at("generically_reduced").get<bool>() ? " (generically reduced)"
                                                       : " (generically non-reduced)")
         << "\n";
    }
  }
  if (j.contains("tangent_middle"))
    os << "  middle-point tangent dimension: " << j.at("tangent_middle") << "\n";
  if (j.contains("smoothness_conjecture"))
    os << "  smoothness conjecture predicate (NOT a theorem): "
       << (j.at("smoothness_conjecture").at("value").get<bool>() ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace fano
