#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qhh/generator.hpp"
#include "qhh/report.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitInfinite = 2;
constexpr int kExitCrossCheck = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qhh::Error("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

qhh::ValidatedPresentation load(const std::string& path) {
  return qhh::validate(qhh::parse_presentation(read_file(path)));
}

std::vector<long> parse_chars(const std::string& csv) {
  std::vector<long> chars;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    chars.push_back(qhh::CharSpec::of(std::stol(item)).value);
  }
  if (chars.empty()) throw qhh::ValidationError("empty characteristic list");
  return chars;
}

void cmd_validate(const std::string& file) {
  auto vp = load(file);
  auto split = qhh::connected_components(vp);
  std::cout << "valid: " << (vp->name.empty() ? "(unnamed)" : vp->name) << " with "
            << vp->quiver.num_vertices() << " vertices, " << vp->quiver.num_arrows()
            << " arrows, " << vp->relations.size() << " relations, " << split.components.size()
            << " component(s)\n";
  std::cout << "tree without double arrows: "
            << (qhh::is_tree_without_double_arrows(vp) ? "yes" : "no") << "\n";
}

void cmd_basis(const std::string& file, bool list) {
  auto vp = load(file);
  auto split = qhh::connected_components(vp);
  long total = 0;
  for (const auto& component : split.components) {
    auto b = qhh::enumerate_basis(component);
    total += b.size();
    std::cout << component->name << ": |B| = " << b.size() << ", longest path " << b.max_length()
              << "\n";
    if (list)
      for (const auto& p : b.paths())
        std::cout << "  " << qhh::format_path(component->quiver, p) << "\n";
  }
  if (split.components.size() > 1) std::cout << "total dim A = " << total << "\n";
}

void cmd_invariants(const std::string& file, const std::vector<long>& chars, bool oracle,
                    bool json) {
  auto vp = load(file);
  std::string json_out;
  bool first = true;
  if (json && chars.size() > 1) json_out += "[\n";
  for (long c : chars) {
    auto report = qhh::compute_report(vp, qhh::CharSpec::of(c), oracle);
    if (json) {
      std::string one = qhh::serialize_report(report, qhh::ReportFormat::json);
      if (chars.size() > 1) {
        if (!first) json_out += ",\n";
        one.pop_back();  // newline
        json_out += one;
      } else {
        json_out += one;
      }
    } else {
      std::cout << qhh::serialize_report(report, qhh::ReportFormat::text);
    }
    first = false;
  }
  if (json && chars.size() > 1) json_out += "\n]\n";
  if (json) std::cout << json_out;
}

void cmd_circuits(const std::string& file) {
  auto vp = load(file);
  auto split = qhh::connected_components(vp);
  for (const auto& component : split.components) {
    auto b = qhh::enumerate_basis(component);
    auto census = qhh::classify(component, b);
    std::cout << component->name << ": |Q_0⊙B| = " << census.q0b_total
              << ", |Q_1⊙B| = " << census.q1b_total << ", |Z⊙B| = " << census.zb_total
              << ", |W| = " << census.w_total << ", s = " << census.strong_count
              << ", e = " << census.efficient_count << "\n";
    std::cout << "  circuit | length | period | mult | flags | w_C | (Q_0⊙B)_C (Q_1⊙B)_C (Z⊙B)_C\n";
    for (const auto& c : census.circuits) {
      std::string flags;
      if (c.strong) flags += "strong ";
      if (c.useful) flags += "useful ";
      if (c.efficient) flags += "efficient ";
      if (flags.empty()) flags = "-";
      std::cout << "  " << qhh::format_circuit(component->quiver, c.key) << " | " << c.length
                << " | " << c.period << " | " << c.multiplicity << " | " << flags << " | " << c.w
                << " | " << c.q0b << " " << c.q1b << " " << c.zb << "\n";
    }
  }
}

void cmd_explain(const std::string& file, long characteristic) {
  auto vp = load(file);
  auto split = qhh::connected_components(vp);
  auto ch = qhh::CharSpec::of(characteristic);
  for (const auto& component : split.components) {
    auto b = qhh::enumerate_basis(component);
    auto census = qhh::classify(component, b);
    auto result = qhh::dim_hh1(census, ch);
    std::cout << component->name << ": dim HH_1 = " << result.dimension << " (s + Σ w_C - e"
              << (ch.positive() ? "_p'" : "") << " = " << result.via_theorem
              << "; pair-count form = " << result.via_corollary << ")\n";
    for (const auto& [key, contribution] : result.per_circuit) {
      const qhh::Circuit* c = census.find(key);
      std::cout << "  " << qhh::format_circuit(component->quiver, key) << ": contributes "
                << contribution;
      if (c->efficient) std::cout << " (efficient, w_C = " << c->w << ", mult " << c->multiplicity << ")";
      else if (c->strong && !key.trivial()) std::cout << " (strong)";
      std::cout << "\n";
    }
    auto vanishing = qhh::hh1_vanishes(census, ch);
    if (vanishing.vanishes)
      std::cout << "  vanishes: yes\n";
    else
      std::cout << "  vanishes: no — "
                << qhh::format_witness(component->quiver, *vanishing.witness) << "\n";
  }
}

void cmd_neat(const std::string& file) {
  auto vp = load(file);
  auto split = qhh::connected_components(vp);
  for (const auto& component : split.components) {
    auto b = qhh::enumerate_basis(component);
    auto table = qhh::neat_classes(component, b);
    std::cout << component->name << ": |B⊙B| = " << table.pairs.size() << ", classes = "
              << table.classes.size() << ", r = " << table.r << ", sym = " << table.sym << "\n";
    for (int c = 0; c < static_cast<int>(table.classes.size()); ++c) {
      const auto& cls = table.classes[c];
      auto [i, j] = table.pairs[cls.members.front()];
      std::cout << "  class " << c << ": size " << cls.members.size() << ", rep ("
                << qhh::format_path(component->quiver, b.path(i)) << ", "
                << qhh::format_path(component->quiver, b.path(j)) << "), "
                << (cls.neat ? "neat" : "not neat") << ", circuit "
                << qhh::format_circuit(component->quiver, cls.circuit) << ", flip -> class "
                << cls.flip_class << (cls.flip_class == c ? " (symmetric)" : "") << "\n";
    }
  }
}

int cmd_check(const std::string& file, const std::vector<long>& chars) {
  auto vp = load(file);
  for (long c : chars) {
    auto report = qhh::compute_report(vp, qhh::CharSpec::of(c), /*with_oracle=*/true);
    std::cout << "char " << c << ": formulas and linear algebra agree (dim HH^1(TA) = "
              << report.total.hh1_ta << ")\n";
  }
  return 0;
}

void cmd_gen(std::uint64_t seed, int count, const std::string& out_dir, const qhh::GenConfig& base) {
  qhh::GenConfig cfg = base;
  cfg.seed = seed;
  qhh::PresentationGenerator gen(cfg);
  std::filesystem::create_directories(out_dir);
  for (int i = 0; i < count; ++i) {
    auto vp = gen.next();
    std::string path = out_dir + "/gen_" + std::to_string(seed) + "_" + std::to_string(i) + ".quiver";
    std::ofstream out(path, std::ios::binary);
    out << qhh::serialize_presentation(vp.get());
    std::cout << path << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homological invariants of monomial path algebras and their trivial extensions"};
  app.require_subcommand(1);

  std::string file;
  long characteristic = 0;
  std::string chars_csv;
  bool with_oracle = false, as_json = false, list_basis = false;

  auto* validate_cmd = app.add_subcommand("validate", "parse and validate a presentation file");
  validate_cmd->add_option("file", file)->required();

  auto* basis_cmd = app.add_subcommand("basis", "enumerate the nonzero-path basis");
  basis_cmd->add_option("file", file)->required();
  basis_cmd->add_flag("--list", list_basis, "print every basis path");

  auto* inv_cmd = app.add_subcommand("invariants", "compute all dimensions");
  inv_cmd->add_option("file", file)->required();
  auto* char_opt =
      inv_cmd->add_option("--char", characteristic, "field characteristic (0 or a prime)");
  auto* chars_opt = inv_cmd->add_option("--chars", chars_csv,
                                        "comma-separated characteristics; one report each");
  char_opt->excludes(chars_opt);
  inv_cmd->add_flag("--oracle", with_oracle, "cross-check formulas against linear algebra");
  inv_cmd->add_flag("--json", as_json, "machine-readable output");

  auto* circuits_cmd = app.add_subcommand("circuits", "print the circuit census");
  circuits_cmd->add_option("file", file)->required();

  auto* explain_cmd = app.add_subcommand("explain", "per-circuit first homology contributions");
  explain_cmd->add_option("file", file)->required();
  explain_cmd->add_option("--char", characteristic, "field characteristic (0 or a prime)");

  auto* neat_cmd = app.add_subcommand("neat", "print the cyclic-pair classes");
  neat_cmd->add_option("file", file)->required();

  auto* check_cmd = app.add_subcommand("check", "compare formulas with the linear-algebra route");
  check_cmd->add_option("file", file)->required();
  std::string check_chars = "0,2,3,5";
  check_cmd->add_option("--chars", check_chars, "characteristics to check (default 0,2,3,5)");

  auto* gen_cmd = app.add_subcommand("gen", "emit random valid presentation files");
  std::uint64_t seed = 0;
  int count = 10;
  std::string out_dir = ".";
  qhh::GenConfig gen_base;
  gen_cmd->add_option("--seed", seed, "generator seed");
  gen_cmd->add_option("--count", count, "number of files");
  gen_cmd->add_option("--out", out_dir, "output directory");
  gen_cmd->add_option("--max-vertices", gen_base.max_vertices);
  gen_cmd->add_option("--max-arrows", gen_base.max_arrows);
  gen_cmd->add_option("--max-relation-length", gen_base.max_relation_length);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) {
      cmd_validate(file);
    } else if (basis_cmd->parsed()) {
      cmd_basis(file, list_basis);
    } else if (inv_cmd->parsed()) {
      if (!char_opt->count() && !chars_opt->count())
        throw qhh::ValidationError("invariants needs --char or --chars");
      std::vector<long> chars = chars_csv.empty()
                                    ? std::vector<long>{qhh::CharSpec::of(characteristic).value}
                                    : parse_chars(chars_csv);
      cmd_invariants(file, chars, with_oracle, as_json);
    } else if (circuits_cmd->parsed()) {
      cmd_circuits(file);
    } else if (explain_cmd->parsed()) {
      cmd_explain(file, characteristic);
    } else if (neat_cmd->parsed()) {
      cmd_neat(file);
    } else if (check_cmd->parsed()) {
      return cmd_check(file, parse_chars(check_chars));
    } else if (gen_cmd->parsed()) {
      cmd_gen(seed, count, out_dir, gen_base);
    }
  } catch (const qhh::CrossCheckError& e) {
    std::cerr << "cross-check failure: " << e.what() << "\n";
    return kExitCrossCheck;
  } catch (const qhh::InfiniteDimensionalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfinite;
  } catch (const qhh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
