#include "qhh/report.hpp"

#include <sstream>

#include <json.hpp>

namespace qhh {

namespace {

ExactField field_of(CharSpec ch) {
  return ch.positive() ? ExactField::prime(ch.value) : ExactField::rationals();
}

}  // namespace

MinimalityVerdict minimality_check(const ValidatedPresentation& component, CharSpec ch,
                                   const ComponentInvariants& inv) {
  MinimalityVerdict v;
  v.center_isomorphic = inv.dim_z == inv.hh1_ta;
  v.hh1_ta_is_one = inv.hh1_ta == 1;
  v.hh1_cohomology_zero = inv.hh1_cohomology == 0;
  v.tree_quiver = is_tree_without_double_arrows(component);
  v.degenerate_point_char2 = ch.value == 2 && component->quiver.num_vertices() == 1 &&
                             component->quiver.num_arrows() == 0;

  if (v.degenerate_point_char2) {
    // k[x]/(x^2) has two outer derivations in characteristic 2, so the tree
    // criterion and the cohomology criterion hold while dim HH^1(TA) = 2.
    if (v.hh1_ta_is_one || !v.hh1_cohomology_zero || !v.tree_quiver || inv.hh1_ta != 2)
      throw CrossCheckError("minimality: the one-point component in characteristic 2 did not "
                            "produce the expected dimensions");
    return v;
  }
  if (v.hh1_ta_is_one != v.hh1_cohomology_zero || v.hh1_ta_is_one != v.tree_quiver ||
      v.center_isomorphic != v.hh1_ta_is_one)
    throw CrossCheckError(
        "minimality: the equivalent conditions disagree on component '" + inv.name +
        "': Z(A)~HH1(TA)=" + std::to_string(v.center_isomorphic) +
        ", dim HH1(TA)=1 is " + std::to_string(v.hh1_ta_is_one) +
        ", HH1(A)=0 is " + std::to_string(v.hh1_cohomology_zero) +
        ", tree is " + std::to_string(v.tree_quiver));
  return v;
}

InvariantsReport compute_report(const ValidatedPresentation& p, CharSpec ch, bool with_oracle) {
  const ExactField f = field_of(ch);
  InvariantsReport report;
  report.characteristic = ch.value;

  ComponentSplit split = connected_components(p);
  bool all_minimal = true;
  bool any_oracle = false;

  report.total.name = "total";
  if (ch.positive()) report.total.e_p_prime = 0;

  for (const auto& component : split.components) {
    PathBasis b = enumerate_basis(component);
    CircuitCensus census = classify(component, b);
    HH1Result hh1 = dim_hh1(census, ch);
    NeatClassTable table = neat_classes(component, b);

    ComponentInvariants inv;
    inv.name = component->name;
    inv.dim_a = b.size();
    inv.dim_z = center_dim(component, b, f);
    inv.hh1 = hh1.dimension;
    inv.hh1_cohomology = hh1_cohomology_dim(component, b, f);
    inv.alt = dim_alt(table, ch);
    inv.r = table.r;
    inv.sym = table.sym;
    inv.s = census.strong_count;
    inv.e = census.efficient_count;
    if (ch.positive()) inv.e_p_prime = census.efficient_pprime_count(ch.value);
    inv.hh1_ta = inv.dim_z + inv.hh1_cohomology + inv.hh1 + inv.alt;
    if (inv.hh1_ta < 1)
      throw CrossCheckError("component '" + inv.name + "': dim HH^1(TA) = " +
                            std::to_string(inv.hh1_ta) + " < 1");

    if (with_oracle) {
      any_oracle = true;
      ChainComplexSlice slice = build_chain_slice(component, b);
      if (!composes_to_zero(slice))
        throw CrossCheckError("component '" + inv.name + "': d0 ∘ d1 != 0");
      inv.oracle_hh1 = hh1_homology_dim(slice, f);
      HomAltDims dims = hom_and_alt_dims(component, b, f);
      inv.oracle_hom = dims.hom;
      inv.oracle_alt = dims.alt;
      if (*inv.oracle_hh1 != inv.hh1)
        throw CrossCheckError("component '" + inv.name + "': formula dim HH_1 = " +
                              std::to_string(inv.hh1) + " but the homology computation gives " +
                              std::to_string(*inv.oracle_hh1));
      if (*inv.oracle_hom != inv.r)
        throw CrossCheckError("component '" + inv.name + "': r = " + std::to_string(inv.r) +
                              " but the bimodule nullspace has dimension " +
                              std::to_string(*inv.oracle_hom));
      if (*inv.oracle_alt != inv.alt)
        throw CrossCheckError("component '" + inv.name + "': formula dim Alt = " +
                              std::to_string(inv.alt) + " but the nullspace computation gives " +
                              std::to_string(*inv.oracle_alt));
    }

    inv.minimality = minimality_check(component, ch, inv);
    all_minimal = all_minimal && inv.minimality.minimal();

    report.total.dim_a += inv.dim_a;
    report.total.dim_z += inv.dim_z;
    report.total.hh1 += inv.hh1;
    report.total.hh1_cohomology += inv.hh1_cohomology;
    report.total.alt += inv.alt;
    report.total.r += inv.r;
    report.total.sym += inv.sym;
    report.total.s += inv.s;
    report.total.e += inv.e;
    if (ch.positive()) *report.total.e_p_prime += *inv.e_p_prime;
    report.total.hh1_ta += inv.hh1_ta;

    report.components.push_back(std::move(inv));
  }

  report.minimal = all_minimal;
  report.total.minimality.hh1_ta_is_one = all_minimal;
  if (any_oracle) report.oracle_agreement = true;  // disagreement throws above
  return report;
}

namespace {

nlohmann::json component_json(const ComponentInvariants& inv) {
  nlohmann::json j;
  j["dim_A"] = inv.dim_a;
  j["dim_Z"] = inv.dim_z;
  j["hh1"] = inv.hh1;
  j["hh1_cohomology"] = inv.hh1_cohomology;
  j["alt"] = inv.alt;
  j["r"] = inv.r;
  j["sym"] = inv.sym;
  j["s"] = inv.s;
  j["e"] = inv.e;
  j["e_p_prime"] = inv.e_p_prime ? nlohmann::json(*inv.e_p_prime) : nlohmann::json(nullptr);
  j["hh1_ta"] = inv.hh1_ta;
  return j;
}

}  // namespace

std::string serialize_report(const InvariantsReport& report, ReportFormat format) {
  if (format == ReportFormat::json) {
    nlohmann::json j;
    j["char"] = report.characteristic;
    j["components"] = nlohmann::json::array();
    for (const auto& inv : report.components) j["components"].push_back(component_json(inv));
    j["total"] = component_json(report.total);
    j["minimal"] = report.minimal;
    j["oracle_agreement"] =
        report.oracle_agreement ? nlohmann::json(*report.oracle_agreement) : nlohmann::json(nullptr);
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "characteristic " << report.characteristic << "\n";
  auto line = [&](const ComponentInvariants& inv) {
    out << "  " << (inv.name.empty() ? "(unnamed)" : inv.name) << ": dim A = " << inv.dim_a
        << ", dim Z = " << inv.dim_z << ", dim HH_1 = " << inv.hh1
        << ", dim HH^1 = " << inv.hh1_cohomology << ", dim Alt = " << inv.alt
        << ", dim HH^1(TA) = " << inv.hh1_ta << "\n";
    out << "    r = " << inv.r << ", sym = " << inv.sym << ", s = " << inv.s << ", e = " << inv.e;
    if (inv.e_p_prime) out << ", e_p' = " << *inv.e_p_prime;
    out << "\n";
    if (inv.oracle_hh1)
      out << "    checks: homology = " << *inv.oracle_hh1 << ", hom = " << *inv.oracle_hom
          << ", alt = " << *inv.oracle_alt << " (all matching)\n";
  };
  for (const auto& inv : report.components) line(inv);
  if (report.components.size() > 1) line(report.total);
  out << "  dim Z and dim HH^1 are computed by linear algebra; dim HH_1 and dim Alt by the "
         "circuit formulas\n";
  out << "  minimal (dim HH^1(TA) = #components): " << (report.minimal ? "yes" : "no") << "\n";
  if (report.oracle_agreement)
    out << "  oracle agreement: " << (*report.oracle_agreement ? "yes" : "NO") << "\n";
  return out.str();
}

}  // namespace qhh
